use bmlab::mahler_lvalues::*;
fn main() {
    let t0 = std::time::Instant::now();
    let l4 = l_value(EtaForm::F3_15, 4).unwrap();
    println!("L(f3_15, 4) = {:.15} tail<={:.1e} terms={} ({:?})", l4.value, l4.tail_bound, l4.terms, t0.elapsed());
    let t0 = std::time::Instant::now();
    let l5 = l_value(EtaForm::F4_6, 5).unwrap();
    println!("L(f4_6, 5)  = {:.15} tail<={:.1e} terms={} ({:?})", l5.value, l5.tail_bound, l5.terms, t0.elapsed());
    // Conjectured relations vs mahler measures
    let t0 = std::time::Instant::now();
    let m5 = mahler_linear(5, 12, 1e-9).unwrap();
    let m6 = mahler_linear(6, 12, 1e-9).unwrap();
    println!("m5 = {:.12} (est {:.1e}), m6 = {:.12} (est {:.1e}) ({:?})", m5.value, m5.err_estimate, m6.value, m6.err_estimate, t0.elapsed());
    let pi = std::f64::consts::PI;
    let rv5 = 6.0 * (15f64.sqrt()/(2.0*pi)).powi(5) * l4.value;
    let rv6 = 3.0 * (6f64.sqrt()/pi).powi(6) * l5.value;
    println!("conj m5 rel = {:.2e}", (m5.value/rv5 - 1.0).abs());
    println!("conj m6 rel = {:.2e}", (m6.value/rv6 - 1.0).abs());
}
