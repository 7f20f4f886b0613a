//! Rewrite words in a Lie algebra into PBW normal form and compare against a
//! matrix representation.

use hopfcat::constructors::{pbw_straighten, LieAlgebra};
use hopfcat::exactlin::{int, Scalar};
use hopfcat::hopf::fmt_combination;
use hopfcat::Result;

type Mat = [[Scalar; 2]; 2];

fn mul(a: &Mat, b: &Mat) -> Mat {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn m(rows: [[i64; 2]; 2]) -> Mat {
    rows.map(|r| r.map(int))
}

fn main() -> Result<()> {
    let l = LieAlgebra::sl2();
    // the defining representation of sl2, basis h x y
    let rep = [m([[1, 0], [0, -1]]), m([[0, 1], [0, 0]]), m([[0, 0], [1, 0]])];
    let one = m([[1, 0], [0, 1]]);

    for word in [vec![2, 1], vec![2, 1, 0], vec![1, 2, 2, 1], vec![2, 2, 1, 1]] {
        let spelled: Vec<&str> = word.iter().map(|&i| l.label(i)).collect();
        let poly = pbw_straighten(&l, &word)?;
        let normal = fmt_combination(poly.iter().map(|(mono, c)| (mono.label(l.labels()), c)));
        println!("{} = {}", spelled.join(" "), normal);

        let direct = word.iter().fold(one.clone(), |acc, &i| mul(&acc, &rep[i]));
        let mut summed = m([[0, 0], [0, 0]]);
        for (mono, c) in &poly {
            let p = mono.word().into_iter().fold(one.clone(), |acc, i| mul(&acc, &rep[i]));
            for i in 0..2 {
                for j in 0..2 {
                    summed[i][j] += c * &p[i][j];
                }
            }
        }
        assert_eq!(direct, summed);
    }
    println!("every normal form agrees with the 2x2 matrices");
    Ok(())
}
