//! JSON AST schema.
//!
//! Node kinds: `Const` (value `p/q` as a string), `I`, `Pi`, `Variable`,
//! `Parameter`, `Add`, `Mul`, `Pow`, `FunctionApp` (head names in
//! lower_snake form, e.g. `bessel_j`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

use super::{normalize, Expr, Head};

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum Node {
    Const { value: String },
    I,
    Pi,
    Variable { name: String },
    Parameter { name: String },
    Add { args: Vec<Node> },
    Mul { args: Vec<Node> },
    Pow { base: Box<Node>, exponent: Box<Node> },
    FunctionApp { head: String, args: Vec<Node> },
}

fn to_node(e: &Expr) -> Node {
    match e {
        Expr::Const(c) => Node::Const { value: c.to_string() },
        Expr::I => Node::I,
        Expr::Pi => Node::Pi,
        Expr::Var(v) => Node::Variable { name: v.clone() },
        Expr::Param(v) => Node::Parameter { name: v.clone() },
        Expr::Add(xs) => Node::Add { args: xs.iter().map(to_node).collect() },
        Expr::Mul(xs) => Node::Mul { args: xs.iter().map(to_node).collect() },
        Expr::Pow(b, ex) => Node::Pow {
            base: Box::new(to_node(b)),
            exponent: Box::new(to_node(ex)),
        },
        Expr::App(h, xs) => Node::FunctionApp {
            head: h.json_name().to_string(),
            args: xs.iter().map(to_node).collect(),
        },
    }
}

fn from_node(n: &Node) -> Result<Expr> {
    Ok(match n {
        Node::Const { value } => {
            let r: Rat = value
                .parse()
                .map_err(|_| Error::Unsupported(format!("bad rational literal `{value}`")))?;
            Expr::Const(r)
        }
        Node::I => Expr::I,
        Node::Pi => Expr::Pi,
        Node::Variable { name } => Expr::Var(name.clone()),
        Node::Parameter { name } => Expr::Param(name.clone()),
        Node::Add { args } => Expr::Add(args.iter().map(from_node).collect::<Result<_>>()?),
        Node::Mul { args } => Expr::Mul(args.iter().map(from_node).collect::<Result<_>>()?),
        Node::Pow { base, exponent } => {
            Expr::Pow(Box::new(from_node(base)?), Box::new(from_node(exponent)?))
        }
        Node::FunctionApp { head, args } => {
            let h = Head::from_json_name(head).ok_or_else(|| Error::UnknownHead(head.clone()))?;
            Expr::App(h, args.iter().map(from_node).collect::<Result<_>>()?)
        }
    })
}

pub fn expr_to_json(e: &Expr) -> serde_json::Value {
    serde_json::to_value(to_node(e)).expect("expression serializes")
}

pub fn expr_from_json(v: &serde_json::Value) -> Result<Expr> {
    let node: Node = serde_json::from_value(v.clone())
        .map_err(|e| Error::Unsupported(format!("bad expression JSON: {e}")))?;
    Ok(normalize(&from_node(&node)?))
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn json_roundtrip() {
        let e = parse("Sin[x]*Exp[alpha*x] + 3/4", &["x"]).unwrap();
        let v = expr_to_json(&e);
        let back = expr_from_json(&v).unwrap();
        assert_eq!(e, back);
        // serialization is stable byte-wise
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            serde_json::to_string(&expr_to_json(&back)).unwrap()
        );
    }
}
