//! Standard small groups as permutation groups.

use crate::group::PermGroup;
use crate::perm::Permutation;

fn cycle(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points.to_vec()]).expect("valid cycle")
}

pub fn cyclic(n: usize) -> PermGroup {
    let n = n.max(1);
    let gens = if n == 1 {
        vec![]
    } else {
        vec![cycle(n, &(0..n).collect::<Vec<_>>())]
    };
    PermGroup::closure(n, &gens).expect("consistent degree")
}

pub fn symmetric(n: usize) -> PermGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &(0..n).collect::<Vec<_>>()));
        gens.push(cycle(n, &[0, 1]));
    }
    PermGroup::closure(n.max(1), &gens).expect("consistent degree")
}

pub fn alternating(n: usize) -> PermGroup {
    let gens: Vec<Permutation> = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
    PermGroup::closure(n.max(1), &gens).expect("consistent degree")
}

/// Dihedral group of order `2m` acting on the vertices of an `m`-gon.
pub fn dihedral(m: usize) -> PermGroup {
    if m == 2 {
        return PermGroup::closure(
            4,
            &[
                Permutation::parse_cycles(4, "(0 1)(2 3)").expect("valid"),
                Permutation::parse_cycles(4, "(0 2)(1 3)").expect("valid"),
            ],
        )
        .expect("consistent degree");
    }
    let rotation = cycle(m, &(0..m).collect::<Vec<_>>());
    let reflection = Permutation::from_images((0..m).map(|i| ((m - i) % m) as u32).collect())
        .expect("bijection");
    PermGroup::closure(m, &[rotation, reflection]).expect("consistent degree")
}

/// Dicyclic group of order `4n` in its regular representation; `n = 2^k`
/// gives the generalized quaternion group of order `2^(k+2)`.
pub fn dicyclic(n: usize) -> PermGroup {
    let m = 2 * n;
    let index = |k: usize, e: usize| (k % m) + m * e;
    let mut a = vec![0u32; 2 * m];
    let mut x = vec![0u32; 2 * m];
    for k in 0..m {
        // a^k · a = a^(k+1), (a^k x) · a = a^(k-1) x
        a[index(k, 0)] = index(k + 1, 0) as u32;
        a[index(k, 1)] = index(k + m - 1, 1) as u32;
        // a^k · x = a^k x, (a^k x) · x = a^(k+n)
        x[index(k, 0)] = index(k, 1) as u32;
        x[index(k, 1)] = index(k + n, 0) as u32;
    }
    PermGroup::closure(
        2 * m,
        &[
            Permutation::from_images(a).expect("bijection"),
            Permutation::from_images(x).expect("bijection"),
        ],
    )
    .expect("consistent degree")
}

pub fn quaternion8() -> PermGroup {
    dicyclic(2)
}

/// Direct product on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let total = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.embed(0, total)).collect();
    gens.extend(b.generators().iter().map(|g| g.embed(a.degree(), total)));
    PermGroup::closure(total, &gens).expect("consistent degree")
}

/// SL(2,3) acting on the 8 nonzero row vectors of `(Z/3)²`, generated by
/// `[[1,1],[0,1]]` and `[[0,-1],[1,0]]`.
pub fn sl23() -> PermGroup {
    let idx = |x: i64, y: i64| (3 * x.rem_euclid(3) + y.rem_euclid(3) - 1) as usize;
    let mat = |m: [[i64; 2]; 2]| {
        let mut images = vec![0u32; 8];
        for x in 0..3 {
            for y in 0..3 {
                if x == 0 && y == 0 {
                    continue;
                }
                images[idx(x, y)] = idx(x * m[0][0] + y * m[1][0], x * m[0][1] + y * m[1][1]) as u32;
            }
        }
        Permutation::from_images(images).expect("invertible matrix")
    };
    PermGroup::closure(8, &[mat([[1, 1], [0, 1]]), mat([[0, -1], [1, 0]])]).expect("degree 8")
}

/// GL(2,3) on the 8 nonzero vectors of `(Z/3)²`.
pub fn gl23() -> PermGroup {
    let base = sl23();
    let idx = |x: i64, y: i64| (3 * x.rem_euclid(3) + y.rem_euclid(3) - 1) as usize;
    let mut images = vec![0u32; 8];
    for x in 0..3 {
        for y in 0..3 {
            if x == 0 && y == 0 {
                continue;
            }
            // diag(-1, 1)
            images[idx(x, y)] = idx(-x, y) as u32;
        }
    }
    let mut gens = base.generators().to_vec();
    gens.push(Permutation::from_images(images).expect("bijection"));
    PermGroup::closure(8, &gens).expect("degree 8")
}
