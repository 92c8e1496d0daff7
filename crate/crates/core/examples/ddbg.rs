use bmlab::determinant_lab::*;
use bmlab::moments::Moments;
fn main() {
    let m = Moments::new(1e-12);
    let t0 = std::time::Instant::now();
    let (l, r) = psi2_identity(&m, 0.5, 12, 1e-12, 1e-9).unwrap();
    println!("psi2(0.5): lhs={l:.12} rhs={r:.12} rel={:.2e}", (l/r-1.0).abs());
    let (l, r) = psi2_at_one(&m, 1e-12).unwrap();
    println!("psi2(1):   rel={:.2e}", (l/r-1.0).abs());
    let (l, r) = psi3_identity(&m, 0.5, 12, 1e-12, 1e-9).unwrap();
    println!("psi3(0.5): lhs={l:.12} rhs={r:.12} rel={:.2e}", (l/r-1.0).abs());
    let (l, r) = omega3_check_identity(&m, 0.5, 12, 1e-12, 1e-9).unwrap();
    println!("omega3chk(0.5): lhs={l:.12} rhs={r:.12} rel={:.2e}", (l/r-1.0).abs());
    let (l, r) = omega4_check_identity(&m, 0.5, 12, 1e-12, 1e-9).unwrap();
    println!("omega4chk(0.5): lhs={l:.12} rhs={r:.12} rel={:.2e}", (l/r-1.0).abs());
    for (name, l, r) in bologna_table(&m, 1e-12).unwrap() {
        println!("bologna {name}: rel={:.2e}", (l/r-1.0).abs());
    }
    let (l, r) = omega4_endpoint(&m, 1e-12).unwrap();
    println!("omega4 endpoint: lhs={l:.10} rhs={r:.10} rel={:.2e}", (l/r-1.0).abs());
    let pairs = theorem_mahler_pair(&m, 12, 1e-12, 1e-9).unwrap();
    println!("thm Mcheck: rel={:.2e}", (pairs[0].0/pairs[0].1-1.0).abs());
    println!("thm Ncheck: rel={:.2e}", (pairs[1].0/pairs[1].1-1.0).abs());
    println!("total {:?}", t0.elapsed());
}
