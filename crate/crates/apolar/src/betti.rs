//! Graded Betti tables via Koszul homology.
//!
//! For a standard graded cyclic module `B` over the polynomial ring in `v`
//! variables, `beta_{i,j}` is the dimension of the degree-`j` part of the
//! `i`-th homology of `B` tensored with the Koszul complex on the variables.
//! Only finite-dimensional graded pieces and multiplication-by-variable
//! matrices are needed, so the exact rational kernels do all the work and
//! no syzygy computation is involved. Each `(i, j)` block depends only on
//! the pieces of `B` in degrees `j-i-1 ..= j-i+1`, so truncated quotients
//! give exact columns up to the cap.

use std::collections::{BTreeMap, HashMap};

use crate::duality::ApolarAlgebra;
use crate::linalg::{self, QMat};
use num::traits::Zero;

use crate::milnor::IdealQuotient;
use crate::poly::Poly;
use crate::Result;

/// Graded module interface consumed by the Koszul machinery.
pub trait GradedModule {
    /// Number of ring variables (the size of the Koszul complex).
    fn nvars(&self) -> usize;
    /// Dimension of the degree-`m` piece.
    fn dim(&self, m: usize) -> usize;
    /// Matrix of multiplication by variable `i` from degree `m` to `m + 1`.
    fn var_map(&self, i: usize, m: usize) -> QMat;
    /// Largest degree with a nonzero piece, when that is known.
    fn known_socle(&self, scan_cap: usize) -> Option<usize>;
}

impl GradedModule for ApolarAlgebra {
    fn nvars(&self) -> usize {
        ApolarAlgebra::nvars(self)
    }

    fn dim(&self, m: usize) -> usize {
        ApolarAlgebra::dim(self, m)
    }

    fn var_map(&self, i: usize, m: usize) -> QMat {
        let rows = self.dim(m + 1);
        let basis = self.basis_ops(m.min(self.socle_degree()));
        let cols = self.dim(m);
        let mut out = QMat::zeros(rows, cols);
        if rows == 0 || cols == 0 {
            return out;
        }
        let var = Poly::variable(ApolarAlgebra::nvars(self), i);
        for (j, b) in basis.iter().enumerate() {
            let prod = var
                .checked_mul(b)
                .expect("operator shift exceeds the degree cap");
            let coords = self.class_coords(&prod, m + 1);
            for (r, c) in coords.into_iter().enumerate() {
                out.set(r, j, c);
            }
        }
        out
    }

    fn known_socle(&self, _scan_cap: usize) -> Option<usize> {
        Some(self.socle_degree())
    }
}

impl GradedModule for IdealQuotient {
    fn nvars(&self) -> usize {
        IdealQuotient::nvars(self)
    }

    fn dim(&self, m: usize) -> usize {
        IdealQuotient::dim(self, m)
    }

    fn var_map(&self, i: usize, m: usize) -> QMat {
        IdealQuotient::var_map(self, i, m)
    }

    fn known_socle(&self, scan_cap: usize) -> Option<usize> {
        // Once a graded piece of a cyclic standard quotient dies, everything
        // above it dies too.
        (0..=scan_cap.min(self.max_degree()))
            .find(|&m| IdealQuotient::dim(self, m) == 0)
            .map(|z| z.saturating_sub(1))
    }
}

/// Map `(homological index i, internal degree j) -> beta_{i,j}`, storing
/// nonzero entries only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, usize), usize>,
    pub nvars: usize,
    pub cap: usize,
    /// True when every nonzero entry of the full table lies within the cap
    /// (the module is known Artinian and the cap clears socle + nvars).
    pub complete: bool,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Gorenstein self-duality `beta_{i,j} = beta_{v-i, d+v-j}` for socle
    /// degree `d`.
    pub fn is_self_dual(&self, socle_degree: usize) -> bool {
        let v = self.nvars;
        let top = socle_degree + v;
        self.entries
            .iter()
            .all(|(&(i, j), &b)| i <= v && j <= top && self.get(v - i, top - j) == b)
    }

    /// Macaulay-style grid: columns are homological indices, row `r` holds
    /// `beta_{i, i+r}`.
    pub fn grid(&self) -> String {
        if self.entries.is_empty() {
            return "(empty table)".to_string();
        }
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap();
        let max_r = self.entries.keys().map(|&(i, j)| j - i).max().unwrap();
        let mut out = String::new();
        out.push_str("      ");
        for i in 0..=max_i {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        out.push_str("total:");
        for i in 0..=max_i {
            let t: usize = (0..=max_r).map(|r| self.get(i, i + r)).sum();
            out.push_str(&format!("{t:>6}"));
        }
        out.push('\n');
        for r in 0..=max_r {
            out.push_str(&format!("{r:>5}:"));
            for i in 0..=max_i {
                let b = self.get(i, i + r);
                if b == 0 {
                    out.push_str(&format!("{:>6}", "."));
                } else {
                    out.push_str(&format!("{b:>6}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

fn subsets(v: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(v: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for t in start..v {
            cur.push(t);
            rec(v, size, t + 1, cur, out);
            cur.pop();
        }
    }
    rec(v, size, 0, &mut cur, &mut out);
    out
}

/// Koszul differential from homological position `i` to `i - 1` in internal
/// degree `j`; block column `T` maps into the positions `T` minus one index,
/// with alternating signs, through multiplication by the dropped variable.
pub fn koszul_differential<M: GradedModule>(module: &M, i: usize, j: usize) -> QMat {
    assert!(i >= 1);
    let v = module.nvars();
    let src_deg = j as isize - i as isize;
    let src_block = if src_deg < 0 {
        0
    } else {
        module.dim(src_deg as usize)
    };
    let tgt_deg = src_deg + 1;
    let tgt_block = if tgt_deg < 0 {
        0
    } else {
        module.dim(tgt_deg as usize)
    };
    let src_sets = subsets(v, i);
    let tgt_sets = subsets(v, i - 1);
    let tgt_index: HashMap<Vec<usize>, usize> = tgt_sets
        .iter()
        .cloned()
        .enumerate()
        .map(|(n, s)| (s, n))
        .collect();
    let mut out = QMat::zeros(tgt_block * tgt_sets.len(), src_block * src_sets.len());
    if src_block == 0 || tgt_block == 0 {
        return out;
    }
    let maps: Vec<QMat> = (0..v)
        .map(|t| module.var_map(t, src_deg as usize))
        .collect();
    for (sn, set) in src_sets.iter().enumerate() {
        for (pos, &t) in set.iter().enumerate() {
            let mut reduced = set.clone();
            reduced.remove(pos);
            let tn = tgt_index[&reduced];
            let sign_neg = pos % 2 == 1;
            let block = &maps[t];
            for r in 0..tgt_block {
                for c in 0..src_block {
                    let val = block.at(r, c);
                    if val.is_zero() {
                        continue;
                    }
                    let v0 = if sign_neg { -val.clone() } else { val.clone() };
                    out.set(tn * tgt_block + r, sn * src_block + c, v0);
                }
            }
        }
    }
    out
}

/// Betti numbers `beta_{i,j}` for `j <= j_cap` from Koszul homology.
pub fn koszul_betti<M: GradedModule>(module: &M, j_cap: usize) -> Result<BettiTable> {
    let v = module.nvars();
    let mut rank_cache: HashMap<(usize, usize), usize> = HashMap::new();
    let mut rank_of = |i: usize, j: usize, module: &M| -> usize {
        if i == 0 || i > v {
            return 0;
        }
        *rank_cache
            .entry((i, j))
            .or_insert_with(|| linalg::rank(&koszul_differential(module, i, j)))
    };
    let mut entries = BTreeMap::new();
    for i in 0..=v {
        for j in 0..=j_cap {
            if j < i {
                continue;
            }
            let dim_kij = module.dim(j - i) * crate::binomial(v, i);
            if dim_kij == 0 {
                continue;
            }
            let out_rank = rank_of(i, j, module);
            let in_rank = rank_of(i + 1, j, module);
            let beta = dim_kij - out_rank - in_rank;
            if beta > 0 {
                entries.insert((i, j), beta);
            }
        }
    }
    let complete = match module.known_socle(j_cap) {
        Some(s) => s + v <= j_cap,
        None => false,
    };
    Ok(BettiTable {
        entries,
        nvars: v,
        cap: j_cap,
        complete,
    })
}

/// Degreewise Euler-characteristic identity: the alternating column sums of
/// the table must match the coefficients of `H(B, t) * (1 - t)^v` up to the
/// cap. `hilbert` lists `dim B_m` for `m = 0..=cap`.
pub fn betti_consistency(hilbert: &[usize], table: &BettiTable) -> bool {
    let v = table.nvars;
    let cap = table.cap;
    for j in 0..=cap {
        let mut lhs: i64 = 0;
        for s in 0..=v.min(j) {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            let h = hilbert.get(j - s).copied().unwrap_or(0) as i64;
            lhs += sign * crate::binomial(v, s) as i64 * h;
        }
        let mut rhs: i64 = 0;
        for i in 0..=v {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            rhs += sign * table.get(i, j) as i64;
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milnor::{jac_gens, GradedIdealPresentation};
    use crate::parse::parse_poly;
    use crate::poly::Poly;

    fn p(text: &str, nvars: usize) -> Poly {
        parse_poly(text, nvars).unwrap()
    }

    fn table_for(f: &Poly) -> (BettiTable, ApolarAlgebra) {
        let alg = ApolarAlgebra::new(f).unwrap();
        let cap = alg.socle_degree() + GradedModule::nvars(&alg);
        let t = koszul_betti(&alg, cap).unwrap();
        (t, alg)
    }

    #[test]
    fn one_variable_principal_ideal() {
        let pres = GradedIdealPresentation::new(1, vec![p("x0", 1)]).unwrap();
        let quot = IdealQuotient::new(&pres, 3);
        let t = koszul_betti(&quot, 3).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 1), 1);
        assert_eq!(t.entries.len(), 2);
        assert!(t.complete);
    }

    #[test]
    fn fermat_quartic_resolution() {
        let (t, alg) = table_for(&p("x0^4+x1^4+x2^4", 3));
        let expected: &[((usize, usize), usize)] = &[
            ((0, 0), 1),
            ((1, 2), 3),
            ((1, 4), 2),
            ((2, 3), 2),
            ((2, 5), 3),
            ((3, 7), 1),
        ];
        for &((i, j), b) in expected {
            assert_eq!(t.get(i, j), b, "beta_({i},{j})");
        }
        assert_eq!(t.entries.len(), expected.len());
        assert!(t.complete);
        let mut dims: Vec<usize> = alg.view().dims.clone();
        dims.resize(t.cap + 1, 0);
        assert!(betti_consistency(&dims, &t));
        assert!(t.is_self_dual(4));
    }

    #[test]
    fn complex_property_of_consecutive_differentials() {
        let f = p("x0^4+x1^4+x2^4+(x0+x1+x2)^4", 3);
        let alg = ApolarAlgebra::new(&f).unwrap();
        for i in 1..=2usize {
            for j in 0..=7usize {
                let d_i = koszul_differential(&alg, i, j);
                let d_next = koszul_differential(&alg, i + 1, j);
                if d_i.cols() == d_next.rows() && d_i.rows() > 0 && d_next.cols() > 0 {
                    assert!(
                        d_i.mul_mat(&d_next).is_zero(),
                        "d_{i} . d_{} != 0 at j={j}",
                        i + 1
                    );
                }
            }
        }
    }

    #[test]
    fn betti_numbers_are_invariant_under_variable_relabeling() {
        let f = p("x0^3*x1+x2^4", 3);
        let g = p("x2^3*x0+x1^4", 3); // same form with variables permuted
        let (tf, _) = table_for(&f);
        let (tg, _) = table_for(&g);
        assert_eq!(tf.entries, tg.entries);
    }

    #[test]
    fn complete_intersection_koszul_pattern() {
        // The order-2 Jacobian quotient of the Fermat quartic is generated
        // by the three squares, so its resolution is the Koszul complex on
        // three degree-2 forms.
        let f = p("x0^4+x1^4+x2^4", 3);
        let pres = jac_gens(&f, 2).unwrap();
        let quot = IdealQuotient::new(&pres, 9);
        let t = koszul_betti(&quot, 9).unwrap();
        let got: Vec<(usize, usize, usize)> =
            t.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect();
        assert_eq!(got, [(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)]);
        assert!(t.complete);
    }

    #[test]
    fn truncated_table_of_a_non_artinian_quotient() {
        // Jacobian quotient of a singular quartic: not Artinian, so the
        // table is exact only up to the cap and flagged incomplete.
        let j = jac_gens(&p("x0^3*x1+x2^4", 3), 1).unwrap();
        let quot = IdealQuotient::new(&j, 9);
        let t = koszul_betti(&quot, 8).unwrap();
        assert!(!t.complete);
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 3), 3);
        let dims: Vec<usize> = (0..=8).map(|m| GradedModule::dim(&quot, m)).collect();
        assert!(betti_consistency(&dims, &t));
    }
}
