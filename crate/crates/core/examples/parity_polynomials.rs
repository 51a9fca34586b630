//! The parity polynomials M_n and N_n: closed form via Lucas' theorem and the
//! two-term recursion, which must agree.

use redei::redei::{binom_parity, mn_closed, mn_recursive, RedeiRecursion};

fn main() {
    for n in [1, 2, 5, 7, 13, 34] {
        let pair = mn_closed(n);
        println!("n = {n:>2}: M = {}", pair.m_poly);
        println!("        N = {}", pair.n_poly);
        assert_eq!(pair, mn_recursive(n));
    }

    println!("\nrow 13 of Pascal's triangle mod 2:");
    let row: String = (0..=13)
        .map(|i| if binom_parity(13, i) { '1' } else { '0' })
        .collect();
    println!("{row}");

    let lengths: Vec<usize> = RedeiRecursion::default()
        .skip(1)
        .take(16)
        .map(|p| p.m_poly.len())
        .collect();
    println!("\nterm counts of M_1..M_16: {lengths:?}");
}
