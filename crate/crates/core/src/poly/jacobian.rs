use super::polynomial::Polynomial;

/// All `k`-subsets of `0..r` in lexicographic order.
pub fn combinations(r: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > r {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == r - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion
/// along the first row. Entries must share one ring.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    assert!(k > 0 && m.iter().all(|row| row.len() == k), "square matrix expected");
    let cols: Vec<usize> = (0..k).collect();
    laplace(m, 0, &cols)
}

fn laplace(m: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let ring = m[0][0].ring();
    let mut acc = ring.zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &laplace(m, row + 1, &rest);
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The `n × r` matrix `(∂F_j/∂X_i)` for `i` in `vars`, `j` indexing `gens`.
pub fn jacobian(gens: &[Polynomial], vars: &[usize]) -> Vec<Vec<Polynomial>> {
    vars.iter()
        .map(|&i| gens.iter().map(|g| g.partial_derivative(i)).collect())
        .collect()
}

/// Every maximal minor of the Jacobian with respect to `vars`: one
/// determinant per `vars.len()`-subset of the generators, in lexicographic
/// subset order. Zeros and duplicates are kept. Empty when there are fewer
/// generators than variables.
pub fn jacobian_minors(gens: &[Polynomial], vars: &[usize]) -> Vec<Polynomial> {
    let n = vars.len();
    if gens.len() < n || n == 0 {
        return Vec::new();
    }
    let jac = jacobian(gens, vars);
    combinations(gens.len(), n)
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<Polynomial>> = jac
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect();
            determinant(&sub)
        })
        .collect()
}
