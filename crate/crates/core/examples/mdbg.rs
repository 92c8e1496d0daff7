use bmlab::moments::*;
use bmlab::kernels::KernelKind;
use std::f64::consts::PI;
fn main() {
    let m = Moments::new(1e-13);
    let t0 = std::time::Instant::now();
    let v = m.ikm(1, 2, 1).unwrap();
    println!("IKM(1,2;1) = {v:.16} vs {:.16}  rel={:.2e} ({:?})", PI/(3.0*3f64.sqrt()), (v/(PI/(3.0*3f64.sqrt()))-1.0).abs(), t0.elapsed());
    let v = m.ikm(1, 3, 1).unwrap();
    println!("IKM(1,3;1) = {v:.16} vs {:.16}  rel={:.2e}", PI*PI/16.0, (v/(PI*PI/16.0)-1.0).abs());
    let v = m.vacuum(4).unwrap();
    let zeta3 = (1..200000u64).map(|k| 1.0/((k*k*k) as f64)).sum::<f64>();
    println!("V4 = {v:.16} vs 7z3/8={:.16} rel={:.2e}", 7.0*zeta3/8.0, (v/(7.0*zeta3/8.0)-1.0).abs());
    let s = MomentSpec::two_scale(MomentFamily::Iv, 1, 1, 1, 0.25);
    let v = m.eval(&s, 1e-13).unwrap().value;
    println!("IvKM(1,1;1|1/4) = {v:.16} vs 4/3 rel={:.2e}", (v/(4.0/3.0)-1.0).abs());
    let s = MomentSpec::two_scale(MomentFamily::Ip, 1, 1, 0, 0.25);
    let v = m.eval(&s, 1e-13).unwrap().value;
    println!("IpKM(1,1;0|1/4) = {v:.16} vs 16/9 rel={:.2e}", (v/(16.0/9.0)-1.0).abs());
    let s = MomentSpec::two_scale(MomentFamily::Iv, 1, 1, 1, 0.5);
    for (mm, expect) in [(0u32, 2.0), (1, 4.0), (2, 16.0)] {
        let v = m.u_derivative(&s, mm, 1e-13).unwrap().value;
        println!("D^{mm} IvKM(1,1;1|0.5) = {v:.14} vs {expect} rel={:.2e}", (v/expect-1.0).abs());
    }
    let s0 = MomentSpec::two_scale(MomentFamily::Iv, 1, 1, 1, 0.0);
    let v = m.u_derivative(&s0, 3, 1e-13).unwrap().value;
    println!("D^3 at u=0 = {v:.14} vs 6 rel={:.2e}", (v/6.0-1.0).abs());
    // IKM(0,5;5) relation
    let lhs = m.ikm(0,5,5).unwrap();
    let rhs = 76.0/15.0*m.ikm(0,5,3).unwrap() - 16.0/45.0*m.ikm(0,5,1).unwrap() + 8.0/15.0;
    println!("IKM055 residual = {:.2e}", (lhs-rhs).abs()/rhs.abs());
    // K1KKKK n=1
    let k1k4 = bessel_product_moment(&[(KernelKind::K1,1.0),(KernelKind::K0,1.0),(KernelKind::K0,1.0),(KernelKind::K0,1.0),(KernelKind::K0,1.0)], 2, 1e-13).unwrap().value;
    let rhs = 0.4 * m.ikm(0,5,1).unwrap();
    println!("K1KKKK n=1 residual = {:.2e}", (k1k4-rhs).abs()/rhs.abs());
    // sum rules
    let lhs = PI*PI*m.ikm(3,5,1).unwrap(); let rhs = m.ikm(1,7,1).unwrap();
    println!("pi^2 IKM(3,5;1) vs IKM(1,7;1): rel={:.2e}", (lhs/rhs-1.0).abs());
    let lhs = 9.0*PI*PI*m.ikm(4,4,1).unwrap(); let rhs = 14.0*m.ikm(2,6,1).unwrap();
    println!("9pi^2 IKM(4,4;1) vs 14 IKM(2,6;1): rel={:.2e}", (lhs/rhs-1.0).abs());
    println!("total {:?}", t0.elapsed());
}
