use crate::{smith_normal_form, Int, IntMatrix, Matrix};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A finitely generated abelian group `Z/d_1 + ... + Z/d_k + Z^free`
/// with `1 < d_1 | d_2 | ... | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbGroup {
    pub torsion: Vec<Int>,
    pub free: usize,
}

impl AbGroup {
    pub fn zero() -> Self {
        AbGroup::default()
    }

    pub fn integers() -> Self {
        AbGroup { torsion: vec![], free: 1 }
    }

    /// `Z/n`; `n = 0` gives `Z`, `n = 1` the trivial group.
    pub fn cyclic(n: impl Into<Int>) -> Self {
        Self::from_orders(&[n.into()], 0)
    }

    /// Direct sum of cyclic groups of the given orders (0 meaning infinite) plus `free` copies of Z.
    pub fn from_orders(orders: &[Int], free: usize) -> Self {
        let k = orders.len();
        let mut m = IntMatrix::zeros(k, k);
        for (i, d) in orders.iter().enumerate() {
            m.set(i, i, d.abs());
        }
        let p = Presentation { generators: k, relations: m.rows().to_vec() };
        let mut g = p.decompose().group;
        g.free += free;
        g
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        let orders: Vec<Int> = self.torsion.iter().chain(other.torsion.iter()).cloned().collect();
        Self::from_orders(&orders, self.free + other.free)
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<Int> {
        if self.free > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(Int::one(), |a, b| a * b))
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The abelian group `Z^generators / <relations>`; relations are row vectors.
#[derive(Clone, Debug, Default)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<Vec<Int>>,
}

/// A presentation brought to Smith form, able to express elements in the
/// cyclic decomposition.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub group: AbGroup,
    orders: Vec<Int>,
    kept: Vec<usize>,
    right: IntMatrix,
    right_inv: IntMatrix,
}

impl Presentation {
    pub fn new(generators: usize) -> Self {
        Presentation { generators, relations: vec![] }
    }

    pub fn push(&mut self, rel: Vec<Int>) {
        assert_eq!(rel.len(), self.generators, "relation length mismatch");
        if rel.iter().any(|x| !x.is_zero()) {
            self.relations.push(rel);
        }
    }

    pub fn matrix(&self) -> IntMatrix {
        Matrix::from_rows(self.generators, self.relations.clone())
    }

    pub fn decompose(&self) -> Decomposition {
        let s = smith_normal_form(&self.matrix());
        let orders = s.column_orders();
        let kept: Vec<usize> = (0..orders.len()).filter(|&j| !orders[j].is_one()).collect();
        let torsion = kept.iter().filter(|&&j| !orders[j].is_zero()).map(|&j| orders[j].clone()).collect();
        let free = kept.iter().filter(|&&j| orders[j].is_zero()).count();
        Decomposition {
            group: AbGroup { torsion, free },
            orders,
            kept,
            right: s.right,
            right_inv: s.right_inv,
        }
    }

    /// Isomorphism type of the subgroup generated by `gens` inside this group.
    pub fn subgroup(&self, gens: &[Vec<Int>]) -> AbGroup {
        self.subgroup_presentation(gens).decompose().group
    }

    /// A presentation of the subgroup generated by `gens`, on those generators.
    pub fn subgroup_presentation(&self, gens: &[Vec<Int>]) -> Presentation {
        let k = gens.len();
        if k == 0 {
            return Presentation::new(0);
        }
        let mut rows: Vec<Vec<Int>> = gens.to_vec();
        rows.extend(self.relations.iter().cloned());
        let m = Matrix::from_rows(self.generators, rows);
        let mut p = Presentation::new(k);
        for v in crate::left_kernel(&m) {
            p.push(v[..k].to_vec());
        }
        p
    }

    /// Quotient by further relations.
    pub fn quotient(&self, extra: &[Vec<Int>]) -> Presentation {
        let mut p = self.clone();
        for r in extra {
            p.push(r.clone());
        }
        p
    }
}

impl Decomposition {
    /// Orders of the nontrivial cyclic generators (0 for free ones), torsion first.
    pub fn orders(&self) -> Vec<Int> {
        self.kept.iter().map(|&j| self.orders[j].clone()).collect()
    }

    /// Coordinates of `x` on the nontrivial cyclic generators, reduced modulo their orders.
    pub fn coordinates(&self, x: &[Int]) -> Vec<Int> {
        let y = self.right.apply_row(x);
        self.kept
            .iter()
            .map(|&j| {
                let d = &self.orders[j];
                if d.is_zero() {
                    y[j].clone()
                } else {
                    ((y[j].clone() % d) + d) % d
                }
            })
            .collect()
    }

    pub fn is_zero(&self, x: &[Int]) -> bool {
        self.coordinates(x).iter().all(|c| c.is_zero())
    }

    /// The vector (in the original generators) of the `k`-th nontrivial cyclic generator.
    pub fn generator(&self, k: usize) -> Vec<Int> {
        self.right_inv.row(self.kept[k]).to_vec()
    }
}
