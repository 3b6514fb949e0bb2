//! Finite ℤ-module presentations of GW(F), W(F), Iⁿ(F), K^M_n(F), k^M_n(F)
//! for F = ℂ, ℝ, 𝔽_p, built on the basis of square classes.

use field_arith::{least_nonresidue, BaseField, Field, FieldElement, FieldRef};
use num_traits::{One, Zero};
use zmodule::{AbGroup, Int, Presentation};

use crate::equality::gw_equal;
use crate::error::{GwError, Result};
use crate::form::GWElement;
use crate::square::SquareClass;

#[derive(Clone, Debug)]
pub struct CoefficientTheory {
    field: FieldRef,
    classes: Vec<SquareClass>,
    table: Vec<Vec<usize>>,
    relations: Vec<Vec<Int>>,
}

impl CoefficientTheory {
    /// Square classes with their multiplication table; GW(F) is ℤ[classes]
    /// modulo the isometries of binary forms, which generate all relations
    /// between diagonal forms.
    pub fn new(base: BaseField) -> Result<CoefficientTheory> {
        let field = Field::base_only(base);
        let reps: Vec<i64> = match base {
            BaseField::ComplexModel => vec![1],
            BaseField::RealModel => vec![1, -1],
            BaseField::Prime(p) => vec![1, least_nonresidue(p) as i64],
            BaseField::Rationals => {
                return Err(GwError::Unsupported { op: "finite coefficient presentation", field: field.to_string() })
            }
        };
        let classes: Vec<SquareClass> = reps.iter().map(|&r| SquareClass::int(&field, r)).collect::<Result<_>>()?;
        let index = |c: &SquareClass| classes.iter().position(|d| d == c).unwrap();
        let table = classes.iter().map(|a| classes.iter().map(|b| index(&a.mul(b))).collect()).collect();
        let n = classes.len();
        let binary: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let mut relations = Vec::new();
        for (k, &(a, b)) in binary.iter().enumerate() {
            for &(c, d) in &binary[k + 1..] {
                let f = GWElement::new(&field, vec![classes[a].clone(), classes[b].clone()], vec![]);
                let g = GWElement::new(&field, vec![classes[c].clone(), classes[d].clone()], vec![]);
                if gw_equal(&f, &g)? {
                    let mut r = vec![Int::zero(); n];
                    r[a] += 1;
                    r[b] += 1;
                    r[c] -= 1;
                    r[d] -= 1;
                    relations.push(r);
                }
            }
        }
        Ok(CoefficientTheory { field, classes, table, relations })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn classes(&self) -> &[SquareClass] {
        &self.classes
    }

    pub fn size(&self) -> usize {
        self.classes.len()
    }

    pub fn class_index(&self, c: &SquareClass) -> Option<usize> {
        self.classes.iter().position(|d| d == c)
    }

    pub fn index_of(&self, e: &FieldElement) -> Result<usize> {
        let c = SquareClass::of(&FieldElement::from_rational(&self.field, &e.as_constant().ok_or_else(|| {
            GwError::Unsupported { op: "coefficient", field: e.field().to_string() }
        })?)?)?;
        Ok(self.class_index(&c).unwrap())
    }

    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn unit(&self, i: usize) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.size()];
        v[i] = Int::one();
        v
    }

    pub fn vector(&self, x: &GWElement) -> Result<Vec<Int>> {
        let mut v = vec![Int::zero(); self.size()];
        for c in x.positive() {
            v[self.class_of(c)?] += 1;
        }
        for c in x.negative() {
            v[self.class_of(c)?] -= 1;
        }
        Ok(v)
    }

    fn class_of(&self, c: &SquareClass) -> Result<usize> {
        if c.field().as_ref() == self.field.as_ref() {
            return Ok(self.class_index(c).unwrap());
        }
        self.index_of(c.rep())
    }

    pub fn element(&self, v: &[Int]) -> GWElement {
        let mut x = GWElement::zero(&self.field);
        for (i, k) in v.iter().enumerate() {
            let k: i64 = k.try_into().expect("small coefficient");
            x = x.add(&GWElement::class(&self.classes[i]).scale(k));
        }
        x
    }

    pub fn mul(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.size()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[self.table[i][j]] += x * y;
            }
        }
        out
    }

    pub fn gw_relations(&self) -> &[Vec<Int>] {
        &self.relations
    }

    pub fn h(&self) -> Vec<Int> {
        self.vector(&GWElement::hyperbolic(&self.field)).unwrap()
    }

    /// ⟨q⟩ − 1.
    pub fn pfister_minus(&self, q: usize) -> Vec<Int> {
        let mut v = self.unit(q);
        v[0] -= 1;
        v
    }

    pub fn rank(&self, v: &[Int]) -> Int {
        v.iter().sum()
    }

    pub fn gw(&self) -> Presentation {
        let mut p = Presentation::new(self.size());
        for r in &self.relations {
            p.push(r.clone());
        }
        p
    }

    /// The multiples h·⟨q⟩ spanning the ideal (h).
    pub fn h_multiples(&self) -> Vec<Vec<Int>> {
        (0..self.size()).map(|q| self.mul(&self.h(), &self.unit(q))).collect()
    }

    pub fn w(&self) -> Presentation {
        self.gw().quotient(&self.h_multiples())
    }

    /// Additive generators ⟨b⟩·∏(⟨a_i⟩ − 1) of Iⁿ ⊂ GW(F).
    pub fn i_power_span(&self, n: u32) -> Vec<Vec<Int>> {
        let mut span: Vec<Vec<Int>> = (0..self.size()).map(|b| self.unit(b)).collect();
        for _ in 0..n {
            span = span
                .iter()
                .flat_map(|v| (0..self.size()).map(move |a| (v, a)))
                .map(|(v, a)| self.mul(v, &self.pfister_minus(a)))
                .filter(|v| v.iter().any(|x| !x.is_zero()))
                .collect();
            span.sort();
            span.dedup();
        }
        span
    }

    pub fn gw_group(&self) -> AbGroup {
        self.gw().decompose().group
    }

    pub fn w_group(&self) -> AbGroup {
        self.w().decompose().group
    }

    /// Iⁿ as a subgroup of GW(F); for n ≥ 1 it maps isomorphically to Iⁿ ⊂ W(F).
    pub fn i_power_group(&self, n: u32) -> AbGroup {
        self.gw().subgroup(&self.i_power_span(n))
    }

    /// Iⁿ/Iⁿ⁺¹, with I⁰ = W.
    pub fn kbar(&self, n: u32) -> AbGroup {
        self.w().quotient(&self.i_power_span(n + 1)).subgroup(&self.i_power_span(n))
    }

    /// Presentation of Iⁿ/Iⁿ⁺¹ on the spanning set of Iⁿ.
    pub fn kbar_presentation(&self, n: u32) -> (Vec<Vec<Int>>, Presentation) {
        let span = self.i_power_span(n);
        let p = self.w().quotient(&self.i_power_span(n + 1)).subgroup_presentation(&span);
        (span, p)
    }

    /// Milnor K-theory K^M_n(F), when finitely generated.
    pub fn km(&self, n: u32) -> Option<AbGroup> {
        match (n, self.field.base) {
            (0, _) => Some(AbGroup::integers()),
            (1, BaseField::Prime(p)) => Some(AbGroup::cyclic(p - 1)),
            (_, BaseField::Prime(_)) => Some(AbGroup::zero()),
            _ => None,
        }
    }

    /// k^M_n(F) = K^M_n(F)/2 from the symbol description of each field.
    pub fn km_mod2(&self, n: u32) -> AbGroup {
        match (n, self.field.base) {
            (0, _) => AbGroup::cyclic(2),
            (_, BaseField::RealModel) => AbGroup::cyclic(2),
            (1, BaseField::Prime(_)) => AbGroup::cyclic(2),
            _ => AbGroup::zero(),
        }
    }
}
