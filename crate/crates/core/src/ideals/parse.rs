use std::sync::Arc;

use super::idempotents::central_idempotents;
use super::IdealError;
use crate::expr::{evaluate, parse_expr, EvalTarget, Expr, ParseError};
use crate::field::Cyclotomic;
use crate::hopf::{GroupDatum, HopfElement};

struct Names {
    /// `(name, element)`, longest names first.
    atoms: Vec<(String, HopfElement)>,
}

impl Names {
    fn new(datum: &Arc<GroupDatum>) -> Self {
        let mut atoms = vec![("z".to_string(), HopfElement::z(datum))];
        for (i, e) in central_idempotents(datum).iter().enumerate() {
            let x = HopfElement::from_group_algebra(datum, 0, &e.element);
            atoms.push((format!("e{i}"), x.clone()));
            atoms.push((format!("e_{i}"), x));
        }
        let group = datum.group();
        for h in 0..group.size() {
            let label = group.label(h);
            if label != "1" && label.chars().all(|c| c.is_alphanumeric() || c == '_') {
                atoms.push((label.to_string(), HopfElement::group_element(datum, h)));
            }
        }
        atoms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        Names { atoms }
    }

    /// Split an identifier into known names, so `ze1` reads as `z*e1`.
    fn resolve(&self, name: &str, datum: &Arc<GroupDatum>) -> Option<HopfElement> {
        if name.is_empty() {
            return Some(HopfElement::one(datum));
        }
        for (atom, value) in &self.atoms {
            if let Some(rest) = name.strip_prefix(atom.as_str()) {
                if let Some(tail) = self.resolve(rest, datum) {
                    return Some(value * &tail);
                }
            }
        }
        None
    }
}

#[derive(Clone)]
struct Value {
    names: Arc<Names>,
    element: HopfElement,
}

impl Value {
    fn wrap(&self, element: HopfElement) -> Value {
        Value {
            names: self.names.clone(),
            element,
        }
    }
}

impl EvalTarget for Value {
    fn scalar(&self, value: Cyclotomic) -> Self {
        let datum = self.element.datum();
        let c = value.promote(datum.field().order());
        self.wrap(HopfElement::scalar(datum, &c))
    }

    fn ident(&self, name: &str, offset: usize) -> Result<Self, ParseError> {
        self.names
            .resolve(name, self.element.datum())
            .map(|e| self.wrap(e))
            .ok_or_else(|| ParseError::new(offset, format!("unknown name `{name}`")))
    }

    fn add(&self, a: &Self, b: &Self) -> Self {
        self.wrap(&a.element + &b.element)
    }

    fn sub(&self, a: &Self, b: &Self) -> Self {
        self.wrap(&a.element - &b.element)
    }

    fn mul(&self, a: &Self, b: &Self) -> Self {
        self.wrap(&a.element * &b.element)
    }

    fn neg(&self, a: &Self) -> Self {
        self.wrap(-&a.element)
    }

    fn as_scalar(&self, a: &Self) -> Option<Cyclotomic> {
        let datum = a.element.datum();
        let id = datum.basis_index(0, datum.group().identity());
        a.element
            .coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| i == id || c.is_zero())
            .then(|| a.element.coeffs()[id].clone())
    }

    fn one(&self) -> Self {
        self.wrap(HopfElement::one(self.element.datum()))
    }

    /// Inverses of nonzero multiples of group elements.
    fn inverse(&self, a: &Self) -> Option<Self> {
        let datum = a.element.datum();
        let mut support = a
            .element
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero());
        let (idx, c) = support.next()?;
        if support.next().is_some() {
            return None;
        }
        let (l, h) = datum.basis_pair(idx);
        if l != 0 {
            return None;
        }
        let inv = HopfElement::group_element(datum, datum.group().inv(h));
        Some(self.wrap(inv.scale(&c.inv().ok()?)))
    }
}

fn check_zetas(e: &Expr, order: u64) -> Result<(), ParseError> {
    match e {
        Expr::Zeta(n) if !order.is_multiple_of(*n) => Err(ParseError::new(
            0,
            format!("zeta({n}) does not lie in the datum's field Q(zeta({order}))"),
        )),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            check_zetas(a, order)?;
            check_zetas(b, order)
        }
        Expr::Neg(a) | Expr::Pow(a, _) => check_zetas(a, order),
        _ => Ok(()),
    }
}

/// Parse an element of `H_D` such as `z*(e0 + e1) + e2` or `1 + b`.
///
/// Names: `z`, `e0 .. e{p-1}` (also `e_0`), and the group's element labels.
/// Juxtaposed names may be fused, as in `ze1` or `zb`.
pub fn parse_element(datum: &Arc<GroupDatum>, src: &str) -> Result<HopfElement, IdealError> {
    let expr = parse_expr(src)?;
    check_zetas(&expr, datum.field().order())?;
    let ctx = Value {
        names: Arc::new(Names::new(datum)),
        element: HopfElement::zero(datum),
    };
    Ok(evaluate(&ctx, &expr)?.element)
}
