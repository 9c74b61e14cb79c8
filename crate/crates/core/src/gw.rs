//! Grothendieck-Witt and Witt ring arithmetic via virtual diagonal forms.
//!
//! An element is a formal difference of diagonal quadratic forms
//! `<u_1,...,u_m>`, stored as two multisets of square classes. Over prime
//! fields rank and determinant classify forms completely, so equality is
//! decidable; over the rationals only (rank, signature, determinant) are
//! reported and equality is three-valued.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::{unit_class, ClassData, FieldCtx, FieldElem, UnitClass};
use crate::Trivalent;

/// A virtual diagonal form: `plus` minus `minus`, entries square classes.
///
/// The representation is canonical: both multisets are sorted and pairs of
/// equal classes on opposite sides are cancelled (Witt cancellation holds
/// in odd characteristic, so this does not change the class).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwElem {
    ctx: FieldCtx,
    plus: Vec<UnitClass>,
    minus: Vec<UnitClass>,
}

impl GwElem {
    pub fn zero(ctx: FieldCtx) -> GwElem {
        GwElem {
            ctx,
            plus: Vec::new(),
            minus: Vec::new(),
        }
    }

    /// The unit `<1>` of the ring.
    pub fn one(ctx: FieldCtx) -> GwElem {
        GwElem::diagonal_classes(ctx, vec![UnitClass::identity(ctx, 2)], Vec::new())
    }

    /// The rank-one form `<u>`.
    pub fn rank_one(u: &FieldElem) -> Result<GwElem> {
        Ok(GwElem::diagonal_classes(
            u.ctx(),
            vec![unit_class(u, 2)?],
            Vec::new(),
        ))
    }

    /// Diagonal form `<u_1,...,u_m>` from field elements.
    pub fn diagonal(ctx: FieldCtx, entries: &[FieldElem]) -> Result<GwElem> {
        let mut plus = Vec::with_capacity(entries.len());
        for u in entries {
            plus.push(unit_class(u, 2)?);
        }
        Ok(GwElem::diagonal_classes(ctx, plus, Vec::new()))
    }

    /// The hyperbolic plane h = `<1> + <-1>`.
    pub fn hyperbolic(ctx: FieldCtx) -> GwElem {
        let one = ctx.elem(1);
        let minus_one = ctx.elem(-1);
        GwElem::diagonal(ctx, &[one, minus_one]).expect("units")
    }

    pub fn from_classes(ctx: FieldCtx, plus: Vec<UnitClass>, minus: Vec<UnitClass>) -> Result<GwElem> {
        for c in plus.iter().chain(minus.iter()) {
            if c.modulus() != 2 || c.ctx() != ctx {
                return Err(AlgebraError::ContextMismatch(
                    ctx.to_string(),
                    format!("{}^x classes mod {}", c.ctx(), c.modulus()),
                ));
            }
        }
        Ok(GwElem::diagonal_classes(ctx, plus, minus))
    }

    fn diagonal_classes(ctx: FieldCtx, mut plus: Vec<UnitClass>, mut minus: Vec<UnitClass>) -> GwElem {
        plus.sort();
        minus.sort();
        // cancel common entries pairwise
        let mut p = Vec::with_capacity(plus.len());
        let mut i = 0;
        let mut j = 0;
        let mut m = Vec::with_capacity(minus.len());
        while i < plus.len() && j < minus.len() {
            match plus[i].cmp(&minus[j]) {
                std::cmp::Ordering::Less => {
                    p.push(plus[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    m.push(minus[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        p.extend_from_slice(&plus[i..]);
        m.extend_from_slice(&minus[j..]);
        GwElem {
            ctx,
            plus: p,
            minus: m,
        }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn plus(&self) -> &[UnitClass] {
        &self.plus
    }

    pub fn minus(&self) -> &[UnitClass] {
        &self.minus
    }

    pub fn rank(&self) -> i64 {
        self.plus.len() as i64 - self.minus.len() as i64
    }

    /// Naive determinant: the square class of the product of all entries.
    pub fn det(&self) -> UnitClass {
        let mut d = UnitClass::identity(self.ctx, 2);
        for c in self.plus.iter().chain(self.minus.iter()) {
            // minus entries contribute their inverse, which in the square
            // class group equals the class itself
            d = d.mul(c).expect("same ctx");
        }
        d
    }

    /// Signature over the rationals: entries with positive representative
    /// count +1, negative -1. None over prime fields.
    pub fn signature(&self) -> Option<i64> {
        if self.ctx != FieldCtx::Q {
            return None;
        }
        let sign = |c: &UnitClass| match c.class_data() {
            ClassData::Rat { neg, .. } => {
                if *neg {
                    -1i64
                } else {
                    1
                }
            }
            _ => unreachable!("ctx is Q"),
        };
        let s: i64 = self.plus.iter().map(sign).sum::<i64>() - self.minus.iter().map(sign).sum::<i64>();
        Some(s)
    }

    fn check_ctx(&self, other: &GwElem) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(AlgebraError::ContextMismatch(
                self.ctx.to_string(),
                other.ctx.to_string(),
            ));
        }
        Ok(())
    }

    /// Orthogonal sum.
    pub fn add(&self, other: &GwElem) -> Result<GwElem> {
        self.check_ctx(other)?;
        let mut plus = self.plus.clone();
        plus.extend(other.plus.iter().cloned());
        let mut minus = self.minus.clone();
        minus.extend(other.minus.iter().cloned());
        Ok(GwElem::diagonal_classes(self.ctx, plus, minus))
    }

    pub fn neg(&self) -> GwElem {
        GwElem {
            ctx: self.ctx,
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    pub fn sub(&self, other: &GwElem) -> Result<GwElem> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> GwElem {
        let mut acc = GwElem::zero(self.ctx);
        let term = if k >= 0 { self.clone() } else { self.neg() };
        for _ in 0..k.unsigned_abs() {
            acc = acc.add(&term).expect("same ctx");
        }
        acc
    }

    /// Tensor product, the bilinear extension of `<u> * <v> = <uv>`.
    pub fn mul(&self, other: &GwElem) -> Result<GwElem> {
        self.check_ctx(other)?;
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for a in &self.plus {
            for b in &other.plus {
                plus.push(a.mul(b)?);
            }
            for b in &other.minus {
                minus.push(a.mul(b)?);
            }
        }
        for a in &self.minus {
            for b in &other.plus {
                minus.push(a.mul(b)?);
            }
            for b in &other.minus {
                plus.push(a.mul(b)?);
            }
        }
        Ok(GwElem::diagonal_classes(self.ctx, plus, minus))
    }

    /// Decidable equality over prime fields: rank and determinant classify
    /// the Grothendieck-Witt ring of a finite field completely.
    ///
    /// Over the rationals this returns `Undecidable` unless the canonical
    /// representations agree or an invariant separates the two elements;
    /// use [`GwElem::compare`] for the three-valued form.
    pub fn eq(&self, other: &GwElem) -> Result<bool> {
        self.check_ctx(other)?;
        match self.compare(other) {
            Trivalent::Equal => Ok(true),
            Trivalent::Distinct => Ok(false),
            Trivalent::Unknown => Err(AlgebraError::Undecidable(
                "rank/signature/determinant agree over Q, equality unknown".to_string(),
            )),
        }
    }

    /// Three-valued comparison. Complete over prime fields; over the
    /// rationals `Distinct` is certified by an invariant and `Equal` by
    /// syntactic agreement, anything else is `Unknown`.
    pub fn compare(&self, other: &GwElem) -> Trivalent {
        if self.ctx != other.ctx {
            return Trivalent::Distinct;
        }
        match self.ctx {
            FieldCtx::Fq { .. } => {
                if self.rank() == other.rank() && self.det() == other.det() {
                    Trivalent::Equal
                } else {
                    Trivalent::Distinct
                }
            }
            FieldCtx::Q => {
                if self.rank() != other.rank()
                    || self.det() != other.det()
                    || self.signature() != other.signature()
                {
                    Trivalent::Distinct
                } else if self.plus == other.plus && self.minus == other.minus {
                    Trivalent::Equal
                } else {
                    Trivalent::Unknown
                }
            }
        }
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.eq(&GwElem::zero(self.ctx))
    }

    /// Image in the Witt ring W(F_p), the quotient by multiples of the
    /// hyperbolic plane.
    pub fn witt_class(&self) -> Result<WittClass> {
        let p = match self.ctx {
            FieldCtx::Fq { p } => p,
            FieldCtx::Q => {
                return Err(AlgebraError::Unsupported(
                    "Witt classes are computed over prime fields only".to_string(),
                ))
            }
        };
        let r = self.rank();
        let parity = (r.rem_euclid(2)) as u8;
        // subtract (r - parity)/2 hyperbolic planes; each removes a factor
        // of the class of -1 from the determinant
        let k = (r - parity as i64) / 2;
        let minus_one = unit_class(&self.ctx.elem(-1), 2).expect("unit");
        let det = self.det().mul(&minus_one.pow(k)).expect("same ctx");
        let z4 = if p % 4 == 3 {
            Some(match (parity, det.is_identity()) {
                (0, true) => 0,
                (1, true) => 1,
                (0, false) => 2,
                (1, false) => 3,
                _ => unreachable!(),
            })
        } else {
            None
        };
        Ok(WittClass { parity, det, z4 })
    }
}

impl fmt::Display for GwElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.plus.is_empty() && self.minus.is_empty() {
            return write!(f, "0");
        }
        if !self.plus.is_empty() {
            let entries: Vec<String> = self.plus.iter().map(|c| c.representative().to_string()).collect();
            write!(f, "<{}>", entries.join(","))?;
        }
        if !self.minus.is_empty() {
            if !self.plus.is_empty() {
                write!(f, " - ")?;
            } else {
                write!(f, "-")?;
            }
            let entries: Vec<String> = self.minus.iter().map(|c| c.representative().to_string()).collect();
            write!(f, "<{}>", entries.join(","))?;
        }
        Ok(())
    }
}

/// Complete invariants of a Witt class over F_p.
///
/// `(parity, det)` classify W(F_p) for every odd p; for p = 3 mod 4 the
/// ring is cyclic of order 4 and `z4` records the class of the element in
/// Z/4 with `<1>` as generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittClass {
    pub parity: u8,
    pub det: UnitClass,
    pub z4: Option<u8>,
}

impl WittClass {
    pub fn is_zero(&self) -> bool {
        self.parity == 0 && self.det.is_identity()
    }

    /// Additive order of the class in the Witt group.
    pub fn additive_order(&self) -> u64 {
        if self.is_zero() {
            return 1;
        }
        match self.z4 {
            // W = Z/4: orders follow the cyclic structure
            Some(c) => {
                if c == 2 {
                    2
                } else {
                    4
                }
            }
            // p = 1 mod 4: W = Z/2 x Z/2, every nonzero class has order 2
            None => 2,
        }
    }
}

impl fmt::Display for WittClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(dim mod 2 = {}, det = {}", self.parity, self.det)?;
        if let Some(c) = self.z4 {
            write!(f, ", class {c} in Z/4")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldCtx {
        FieldCtx::prime_field(p).unwrap()
    }

    #[test]
    fn add_identity_and_hyperbolic() {
        let ctx = f(5);
        let one = GwElem::one(ctx);
        assert_eq!(one.add(&GwElem::zero(ctx)).unwrap(), one);
        let h = GwElem::one(ctx).add(&GwElem::rank_one(&ctx.elem(-1)).unwrap()).unwrap();
        assert_eq!(h, GwElem::hyperbolic(ctx));
        assert_eq!(h.rank(), 2);
        assert_eq!(h.det(), unit_class(&ctx.elem(-1), 2).unwrap());
    }

    #[test]
    fn add_three_plus_three_over_f7() {
        // <3> + <3> has rank 2 and determinant class of 9 = 2 mod 7
        let ctx = f(7);
        let three = GwElem::rank_one(&ctx.elem(3)).unwrap();
        let s = three.add(&three).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.det(), unit_class(&ctx.elem(2), 2).unwrap());
    }

    #[test]
    fn mul_unit_and_hyperbolic_absorption() {
        let ctx = f(5);
        let u = GwElem::rank_one(&ctx.elem(3)).unwrap();
        assert_eq!(u.mul(&GwElem::one(ctx)).unwrap(), u);
        let h = GwElem::hyperbolic(ctx);
        // h * <u> = <u> + <-u> is equal to h over any field
        let hu = h.mul(&u).unwrap();
        assert!(hu.eq(&h).unwrap());
        // (<1> - <-1>) * h is hyperbolic-torsion: zero in W
        let x = GwElem::one(ctx).sub(&GwElem::rank_one(&ctx.elem(-1)).unwrap()).unwrap();
        let prod = x.mul(&h).unwrap();
        assert!(prod.witt_class().unwrap().is_zero());
    }

    #[test]
    fn eq_two_two_is_hyperbolic_over_f5() {
        // 2 is a nonsquare mod 5 and -1 = 4 is a square, so <2,2> and h
        // share rank 2 and trivial-determinant-times-square invariants
        let ctx = f(5);
        let two = GwElem::rank_one(&ctx.elem(2)).unwrap();
        let x = two.add(&two).unwrap();
        assert!(x.eq(&GwElem::hyperbolic(ctx)).unwrap());
        let one = GwElem::one(ctx);
        assert!(!one.eq(&two).unwrap());
        assert!(x.eq(&x).unwrap());
    }

    #[test]
    fn witt_classes() {
        let f7 = f(7);
        assert!(GwElem::hyperbolic(f7).witt_class().unwrap().is_zero());
        // <1> generates W(F_7) = Z/4
        let one = GwElem::one(f7).witt_class().unwrap();
        assert_eq!(one.z4, Some(1));
        assert_eq!(one.additive_order(), 4);
        // over F_5, -1 is a square, so <1,1> = h in GW and its Witt class
        // is zero; h itself compares equal
        let f5 = f(5);
        let two_ones = GwElem::one(f5).add(&GwElem::one(f5)).unwrap();
        assert!(two_ones.eq(&GwElem::hyperbolic(f5)).unwrap());
        assert!(two_ones.witt_class().unwrap().is_zero());
        // while <1> itself is a nonzero element of order 2
        let one5 = GwElem::one(f5).witt_class().unwrap();
        assert_eq!(one5.z4, None);
        assert_eq!(one5.additive_order(), 2);
    }

    #[test]
    fn rational_comparison_is_three_valued() {
        let q = FieldCtx::Q;
        let a = GwElem::diagonal(q, &[q.elem(1), q.elem(2)]).unwrap();
        let b = GwElem::diagonal(q, &[q.elem(1), q.elem(3)]).unwrap();
        assert_eq!(a.compare(&b), Trivalent::Distinct);
        assert!(a.eq(&b).is_ok());
        // same invariants, different entries: 2*8 = 16 is a square, so
        // <2,8> and <1,1> share rank, det and signature
        let c = GwElem::diagonal(q, &[q.elem(2), q.elem(8)]).unwrap();
        let d = GwElem::diagonal(q, &[q.elem(1), q.elem(1)]).unwrap();
        assert_eq!(c.compare(&d), Trivalent::Unknown);
        assert_eq!(c.eq(&d).unwrap_err(), AlgebraError::Undecidable(
            "rank/signature/determinant agree over Q, equality unknown".to_string()
        ));
        assert_eq!(c.compare(&c), Trivalent::Equal);
        assert_eq!(a.signature(), Some(2));
        let e = GwElem::diagonal(q, &[q.elem(-2)]).unwrap();
        assert_eq!(e.signature(), Some(-1));
    }
}
