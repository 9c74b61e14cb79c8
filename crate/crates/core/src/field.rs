//! Concrete field backends: prime fields F_p (p an odd prime) and the
//! rationals, with exact arithmetic and power-class (coset) computations
//! for the unit groups F^x/(F^x)^n, n in {2, 6}.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd, inv_mod, is_prime, mul_mod, pow_mod, reduce_mod};
use crate::error::{AlgebraError, Result};

/// A concrete field: F_p for an odd prime p, or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldCtx {
    /// Prime field of odd characteristic p.
    Fq { p: u64 },
    /// The field of rational numbers.
    Q,
}

impl FieldCtx {
    /// Prime field F_p. Rejects p = 2 and composites: 2 must be invertible
    /// everywhere in this library.
    pub fn prime_field(p: u64) -> Result<FieldCtx> {
        if p == 2 || !is_prime(p) {
            return Err(AlgebraError::NotOddPrime(p));
        }
        Ok(FieldCtx::Fq { p })
    }

    pub fn rationals() -> FieldCtx {
        FieldCtx::Q
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldCtx::Fq { p } => *p,
            FieldCtx::Q => 0,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldCtx::Fq { .. })
    }

    /// Parse a field spec string: `fq:<p>` or `q`.
    pub fn parse(spec: &str) -> Result<FieldCtx> {
        if spec == "q" {
            return Ok(FieldCtx::Q);
        }
        if let Some(p) = spec.strip_prefix("fq:") {
            let p: u64 = p
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad prime in field spec '{spec}'")))?;
            return FieldCtx::prime_field(p);
        }
        Err(AlgebraError::Parse(format!(
            "bad field spec '{spec}', expected 'fq:<p>' or 'q'"
        )))
    }

    pub fn spec_string(&self) -> String {
        match self {
            FieldCtx::Fq { p } => format!("fq:{p}"),
            FieldCtx::Q => "q".to_string(),
        }
    }

    /// Element from an integer, reduced into the field.
    pub fn elem(&self, v: i64) -> FieldElem {
        match self {
            FieldCtx::Fq { p } => FieldElem {
                ctx: *self,
                value: Value::Fp(reduce_mod(v, *p)),
            },
            FieldCtx::Q => FieldElem {
                ctx: *self,
                value: Value::Rat(BigRational::from_integer(BigInt::from(v))),
            },
        }
    }

    /// Rational num/den; over F_p this is num * den^{-1}.
    pub fn fraction(&self, num: i64, den: i64) -> Result<FieldElem> {
        if den == 0 {
            return Err(AlgebraError::ZeroElement);
        }
        match self {
            FieldCtx::Fq { p } => {
                let d = reduce_mod(den, *p);
                let inv = inv_mod(d, *p).ok_or(AlgebraError::ZeroElement)?;
                Ok(FieldElem {
                    ctx: *self,
                    value: Value::Fp(mul_mod(reduce_mod(num, *p), inv, *p)),
                })
            }
            FieldCtx::Q => Ok(FieldElem {
                ctx: *self,
                value: Value::Rat(BigRational::new(BigInt::from(num), BigInt::from(den))),
            }),
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElem {
        self.elem(1)
    }

    /// All field elements; only finite backends.
    pub fn elements(&self) -> Result<Vec<FieldElem>> {
        match self {
            FieldCtx::Fq { p } => Ok((0..*p as i64).map(|v| self.elem(v)).collect()),
            FieldCtx::Q => Err(AlgebraError::InfiniteGroup),
        }
    }

    /// All units; only finite backends.
    pub fn units(&self) -> Result<Vec<FieldElem>> {
        match self {
            FieldCtx::Fq { p } => Ok((1..*p as i64).map(|v| self.elem(v)).collect()),
            FieldCtx::Q => Err(AlgebraError::InfiniteGroup),
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Fq { p } => write!(f, "F_{p}"),
            FieldCtx::Q => write!(f, "Q"),
        }
    }
}

/// Canonical representation of an element of the active field.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum Value {
    /// Residue in [0, p).
    Fp(u64),
    /// Sign-normalized lowest-terms fraction.
    Rat(BigRational),
}

/// An element of a [`FieldCtx`]. Representatives are canonical, so equality
/// of elements is representative equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem {
    pub(crate) ctx: FieldCtx,
    pub(crate) value: Value,
}

impl FieldElem {
    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Fp(v) => *v == 0,
            Value::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Fp(v) => *v == 1,
            Value::Rat(r) => r.is_one(),
        }
    }

    fn check_ctx(&self, other: &FieldElem) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(AlgebraError::ContextMismatch(
                self.ctx.to_string(),
                other.ctx.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check_ctx(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Fp(a), Value::Fp(b)) => {
                let p = self.ctx.characteristic();
                Value::Fp((a + b) % p)
            }
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            _ => unreachable!("ctx checked"),
        };
        Ok(FieldElem { ctx: self.ctx, value })
    }

    pub fn neg(&self) -> FieldElem {
        let value = match &self.value {
            Value::Fp(v) => {
                let p = self.ctx.characteristic();
                Value::Fp(if *v == 0 { 0 } else { p - v })
            }
            Value::Rat(r) => Value::Rat(-r),
        };
        FieldElem { ctx: self.ctx, value }
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check_ctx(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Fp(a), Value::Fp(b)) => Value::Fp(mul_mod(*a, *b, self.ctx.characteristic())),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            _ => unreachable!("ctx checked"),
        };
        Ok(FieldElem { ctx: self.ctx, value })
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroElement);
        }
        let value = match &self.value {
            Value::Fp(v) => Value::Fp(inv_mod(*v, self.ctx.characteristic()).expect("nonzero")),
            Value::Rat(r) => Value::Rat(r.recip()),
        };
        Ok(FieldElem { ctx: self.ctx, value })
    }

    pub fn pow(&self, e: u32) -> FieldElem {
        let value = match &self.value {
            Value::Fp(v) => Value::Fp(pow_mod(*v, e as u64, self.ctx.characteristic())),
            Value::Rat(r) => {
                let mut acc = BigRational::one();
                for _ in 0..e {
                    acc *= r;
                }
                Value::Rat(acc)
            }
        };
        FieldElem { ctx: self.ctx, value }
    }

    /// Residue value for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match &self.value {
            Value::Fp(v) => Some(*v),
            Value::Rat(_) => None,
        }
    }

    pub fn rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(r) => Some(r),
            Value::Fp(_) => None,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Fp(v) => write!(f, "{v}"),
            Value::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Coset data of a unit class in F^x/(F^x)^n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum ClassData {
    /// Smallest positive integer in the coset.
    Fp { p: u64, rep: u64 },
    /// Sign bit plus finite map prime -> exponent mod n.
    Rat { neg: bool, exps: BTreeMap<u64, u8> },
}

/// A coset of F^x/(F^x)^n for n in {2, 6}, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitClass {
    pub(crate) n: u8,
    pub(crate) data: ClassData,
}

impl UnitClass {
    pub fn modulus(&self) -> u8 {
        self.n
    }

    pub(crate) fn class_data(&self) -> &ClassData {
        &self.data
    }

    pub fn ctx(&self) -> FieldCtx {
        match &self.data {
            ClassData::Fp { p, .. } => FieldCtx::Fq { p: *p },
            ClassData::Rat { .. } => FieldCtx::Q,
        }
    }

    pub fn identity(ctx: FieldCtx, n: u8) -> UnitClass {
        assert!(n == 2 || n == 6, "class modulus must be 2 or 6");
        match ctx {
            FieldCtx::Fq { p } => UnitClass {
                n,
                data: ClassData::Fp { p, rep: 1 },
            },
            FieldCtx::Q => UnitClass {
                n,
                data: ClassData::Rat {
                    neg: false,
                    exps: BTreeMap::new(),
                },
            },
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.data {
            ClassData::Fp { rep, .. } => *rep == 1,
            ClassData::Rat { neg, exps } => !neg && exps.is_empty(),
        }
    }

    pub fn mul(&self, other: &UnitClass) -> Result<UnitClass> {
        if self.n != other.n || self.ctx() != other.ctx() {
            return Err(AlgebraError::ContextMismatch(
                format!("{}^x/({}^x)^{}", self.ctx(), self.ctx(), self.n),
                format!("{}^x/({}^x)^{}", other.ctx(), other.ctx(), other.n),
            ));
        }
        match (&self.data, &other.data) {
            (ClassData::Fp { p, rep: a }, ClassData::Fp { rep: b, .. }) => Ok(UnitClass {
                n: self.n,
                data: ClassData::Fp {
                    p: *p,
                    rep: canonical_rep_fp(mul_mod(*a, *b, *p), self.n, *p),
                },
            }),
            (ClassData::Rat { neg: s1, exps: e1 }, ClassData::Rat { neg: s2, exps: e2 }) => {
                let mut exps = e1.clone();
                for (q, e) in e2 {
                    let v = exps.entry(*q).or_insert(0);
                    *v = (*v + e) % self.n;
                    if *v == 0 {
                        exps.remove(q);
                    }
                }
                Ok(UnitClass {
                    n: self.n,
                    data: ClassData::Rat { neg: s1 ^ s2, exps },
                })
            }
            _ => unreachable!("ctx checked"),
        }
    }

    /// Inverse class; classes have order dividing n.
    pub fn inv(&self) -> UnitClass {
        self.pow(self.n as i64 - 1)
    }

    /// Integer power, acting additively on the class group.
    pub fn pow(&self, k: i64) -> UnitClass {
        let n = self.n as i64;
        let k = ((k % n) + n) % n;
        let mut acc = UnitClass::identity(self.ctx(), self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ctx");
        }
        acc
    }

    /// A field element representing this coset.
    pub fn representative(&self) -> FieldElem {
        match &self.data {
            ClassData::Fp { p, rep } => FieldCtx::Fq { p: *p }.elem(*rep as i64),
            ClassData::Rat { neg, exps } => {
                let mut v = BigInt::one();
                for (q, e) in exps {
                    for _ in 0..*e {
                        v *= BigInt::from(*q);
                    }
                }
                if *neg {
                    v = -v;
                }
                FieldElem {
                    ctx: FieldCtx::Q,
                    value: Value::Rat(BigRational::from_integer(v)),
                }
            }
        }
    }
}

impl fmt::Display for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative())
    }
}

/// Smallest positive integer in the coset u * (F_p^x)^n.
fn canonical_rep_fp(u: u64, n: u8, p: u64) -> u64 {
    debug_assert!(u != 0);
    let mut best = u;
    for v in 1..p {
        let c = mul_mod(u, pow_mod(v, n as u64, p), p);
        if c < best {
            best = c;
        }
    }
    best
}

fn trial_factor(mut v: num_bigint::BigUint) -> BTreeMap<u64, u64> {
    use num_traits::ToPrimitive;
    let mut out = BTreeMap::new();
    let one = num_bigint::BigUint::one();
    let mut d = 2u64;
    while v > one {
        let bd = num_bigint::BigUint::from(d);
        if &bd * &bd > v {
            // remainder is prime
            let q = v.to_u64().expect("desk-scale factorization");
            *out.entry(q).or_insert(0) += 1;
            break;
        }
        while (&v % &bd).is_zero() {
            *out.entry(d).or_insert(0) += 1;
            v /= &bd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    out
}

/// Canonical class of the unit `u` in F^x/(F^x)^n.
///
/// Constant on orbits u -> u * v^n.
pub fn unit_class(u: &FieldElem, n: u8) -> Result<UnitClass> {
    assert!(n == 2 || n == 6, "class modulus must be 2 or 6");
    if u.is_zero() {
        return Err(AlgebraError::ZeroElement);
    }
    match &u.value {
        Value::Fp(v) => {
            let p = u.ctx.characteristic();
            Ok(UnitClass {
                n,
                data: ClassData::Fp {
                    p,
                    rep: canonical_rep_fp(*v, n, p),
                },
            })
        }
        Value::Rat(r) => {
            let neg = r.is_negative();
            let num = trial_factor(r.numer().abs().to_biguint().expect("abs"));
            let den = trial_factor(r.denom().abs().to_biguint().expect("abs"));
            let mut exps: BTreeMap<u64, u8> = BTreeMap::new();
            for (q, e) in num {
                let v = (e % n as u64) as u8;
                if v != 0 {
                    exps.insert(q, v);
                }
            }
            for (q, e) in den {
                let cur = exps.remove(&q).unwrap_or(0) as i64;
                let v = ((cur - e as i64).rem_euclid(n as i64)) as u8;
                if v != 0 {
                    exps.insert(q, v);
                }
            }
            Ok(UnitClass {
                n,
                data: ClassData::Rat { neg, exps },
            })
        }
    }
}

/// Exhaustive, duplicate-free list of the cosets of F_p^x/(F_p^x)^n,
/// sorted by canonical representative. Length is gcd(n, p-1).
pub fn power_classes(ctx: &FieldCtx, n: u8) -> Result<Vec<UnitClass>> {
    assert!(n == 2 || n == 6, "class modulus must be 2 or 6");
    let p = match ctx {
        FieldCtx::Fq { p } => *p,
        FieldCtx::Q => return Err(AlgebraError::InfiniteGroup),
    };
    let mut classes: Vec<UnitClass> = Vec::new();
    for u in 1..p {
        let c = unit_class(&ctx.elem(u as i64), n)?;
        if !classes.contains(&c) {
            classes.push(c);
        }
    }
    classes.sort();
    debug_assert_eq!(classes.len() as u64, gcd(n as u64, p - 1));
    Ok(classes)
}

/// Whether the cube map u -> u^3 is surjective on the field.
///
/// For F_p this is gcd(3, p-1) = 1; the arithmetic criterion is
/// cross-checked against exhaustive cubing. For the rationals the cube map
/// is never surjective (2 has no rational cube root).
pub fn is_cube_surjective(ctx: &FieldCtx) -> bool {
    match ctx {
        FieldCtx::Fq { p } => {
            let by_gcd = gcd(3, p - 1) == 1;
            let mut cubes: Vec<u64> = (1..*p).map(|u| pow_mod(u, 3, *p)).collect();
            cubes.sort_unstable();
            cubes.dedup();
            let by_enumeration = cubes.len() as u64 == p - 1;
            assert_eq!(by_gcd, by_enumeration, "cube-surjectivity criteria disagree");
            by_gcd
        }
        FieldCtx::Q => false,
    }
}

/// Whether some square in the field admits no sixth root.
///
/// Equivalent to the cube map not being surjective; for prime fields the
/// equivalence is additionally verified by exhaustive search over squares
/// and sixth powers.
pub fn has_square_without_sixth_root(ctx: &FieldCtx) -> bool {
    let by_criterion = !is_cube_surjective(ctx);
    if let FieldCtx::Fq { p } = ctx {
        let mut sixths: Vec<u64> = (1..*p).map(|u| pow_mod(u, 6, *p)).collect();
        sixths.sort_unstable();
        sixths.dedup();
        let exists = (1..*p).any(|u| {
            let sq = mul_mod(u, u, *p);
            sixths.binary_search(&sq).is_err()
        });
        assert_eq!(by_criterion, exists, "sixth-root criteria disagree");
    }
    by_criterion
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldCtx {
        FieldCtx::prime_field(p).unwrap()
    }

    #[test]
    fn rejects_two_and_composites() {
        assert!(FieldCtx::prime_field(2).is_err());
        assert!(FieldCtx::prime_field(9).is_err());
        assert!(FieldCtx::prime_field(1).is_err());
    }

    #[test]
    fn unit_class_identity_case() {
        let c = unit_class(&f(7).elem(1), 6).unwrap();
        assert!(c.is_identity());
    }

    #[test]
    fn unit_class_absorbs_nth_powers() {
        // 3 vs 3 * 2^6 over F_7
        let ctx = f(7);
        let a = unit_class(&ctx.elem(3), 6).unwrap();
        let b = unit_class(&ctx.elem(3).mul(&ctx.elem(2).pow(6)).unwrap(), 6).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unit_class_of_zero_rejected() {
        assert_eq!(
            unit_class(&f(7).elem(0), 6).unwrap_err(),
            AlgebraError::ZeroElement
        );
    }

    #[test]
    fn rational_class_factored_form() {
        // -8/9 -> sign -, exponents {2 -> 3, 3 -> 4} (4 = -2 mod 6)
        let q = FieldCtx::Q;
        let c = unit_class(&q.fraction(-8, 9).unwrap(), 6).unwrap();
        match &c.data {
            ClassData::Rat { neg, exps } => {
                assert!(*neg);
                assert_eq!(exps.get(&2), Some(&3));
                assert_eq!(exps.get(&3), Some(&4));
                assert_eq!(exps.len(), 2);
            }
            _ => panic!("expected rational class"),
        }
    }

    #[test]
    fn power_classes_counts() {
        assert_eq!(power_classes(&f(7), 6).unwrap().len(), 6);
        assert_eq!(power_classes(&f(5), 6).unwrap().len(), 2);
        assert_eq!(power_classes(&f(3), 2).unwrap().len(), 2);
        assert_eq!(
            power_classes(&FieldCtx::Q, 6).unwrap_err(),
            AlgebraError::InfiniteGroup
        );
    }

    #[test]
    fn cube_surjectivity() {
        assert!(is_cube_surjective(&f(5)));
        assert!(!is_cube_surjective(&f(7)));
        assert!(!is_cube_surjective(&FieldCtx::Q));
    }

    #[test]
    fn squares_without_sixth_roots() {
        assert!(has_square_without_sixth_root(&f(7)));
        assert!(!has_square_without_sixth_root(&f(5)));
        assert!(has_square_without_sixth_root(&FieldCtx::Q));
    }

    #[test]
    fn classes_form_a_group() {
        for p in [3u64, 5, 7, 11, 13] {
            for n in [2u8, 6] {
                let ctx = f(p);
                let classes = power_classes(&ctx, n).unwrap();
                assert_eq!(classes.len() as u64, gcd(n as u64, p - 1));
                let id = UnitClass::identity(ctx, n);
                assert!(classes.contains(&id));
                for a in &classes {
                    assert!(classes.contains(&a.inv()));
                    assert_eq!(a.mul(&id).unwrap(), *a);
                    assert_eq!(a.mul(&a.inv()).unwrap(), id);
                    for b in &classes {
                        assert!(classes.contains(&a.mul(b).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn sixth_root_criterion_matches_cube_criterion_up_to_101() {
        for p in (3..=101).filter(|&p| is_prime(p)) {
            let ctx = f(p);
            assert_eq!(has_square_without_sixth_root(&ctx), !is_cube_surjective(&ctx));
        }
    }

    #[test]
    fn rational_class_multiplication_matches_factored_arithmetic() {
        let q = FieldCtx::Q;
        let a = q.fraction(-8, 9).unwrap();
        let b = q.fraction(27, 4).unwrap();
        let prod_class = unit_class(&a.mul(&b).unwrap(), 6).unwrap();
        let class_prod = unit_class(&a, 6)
            .unwrap()
            .mul(&unit_class(&b, 6).unwrap())
            .unwrap();
        assert_eq!(prod_class, class_prod);
    }
}
