//! The link quiver of the group ⟨g, h | gh = hg, g^m = h^n⟩ near the identity.

use crate::error::QuiverError;
use crate::quiver::Quiver;

/// Canonical exponent pair of g^i h^j modulo the lattice spanned by (m, −n).
pub fn canonical(m: i64, n: i64, i: i64, j: i64) -> (i64, i64) {
    // orient the generator so its first nonzero entry is positive
    let (a, b) = if m < 0 || (m == 0 && -n < 0) { (-m, n) } else { (m, -n) };
    if a != 0 {
        let k = i.div_euclid(a);
        (i - k * a, j - k * b)
    } else if b != 0 {
        (i, j.rem_euclid(b))
    } else {
        (i, j)
    }
}

pub fn label(i: i64, j: i64) -> String {
    let part = |x: &str, e: i64| match e {
        0 => String::new(),
        1 => x.to_string(),
        e => format!("{x}^{e}"),
    };
    let s = format!("{}{}", part("g", i), part("h", j));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Vertices: classes of g^i h^j with |i| + |j| ≤ radius. Arrows g^i h^j → g^{i+1} h^j and
/// g^i h^j → g^i h^{j+1} whenever both ends are vertices.
pub fn build_qmn(m: i64, n: i64, radius: i64) -> Result<Quiver, QuiverError> {
    if (m, n) == (1, 1) || (m, n) == (-1, -1) {
        return Err(QuiverError::InvalidInput("(m, n) = ±(1, 1) is excluded".into()));
    }
    if radius < 0 {
        return Err(QuiverError::InvalidInput("negative radius".into()));
    }
    let mut reps: Vec<(i64, i64)> = Vec::new();
    for s in 0..=radius {
        for i in -s..=s {
            let r = s - i.abs();
            for j in if r == 0 { vec![0] } else { vec![-r, r] } {
                let c = canonical(m, n, i, j);
                if !reps.contains(&c) {
                    reps.push(c);
                }
            }
        }
    }
    let mut q = Quiver::new();
    for &(i, j) in &reps {
        q.add_vertex(&label(i, j), 1)?;
    }
    for (a, &(i, j)) in reps.iter().enumerate() {
        for t in [canonical(m, n, i + 1, j), canonical(m, n, i, j + 1)] {
            if let Some(b) = reps.iter().position(|r| *r == t) {
                q.add_arrows(a, b, 1);
            }
        }
    }
    Ok(q)
}
