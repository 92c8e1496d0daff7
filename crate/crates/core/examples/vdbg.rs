use bmlab::operators::*;
use bmlab::moments::{Moments, MomentSpec, MomentFamily};
fn main() {
    let t0 = std::time::Instant::now();
    for n in 1..=4u32 {
        let p = derive_vanhove(n).unwrap();
        println!("L~{n}: {}", p.operator.pretty());
    }
    println!("derive 1-4: {:?}", t0.elapsed());
    let t0 = std::time::Instant::now();
    let p5 = derive_vanhove(5).unwrap();
    println!("L~5 leading: {}", bmlab::exact::poly_to_string(&p5.leading_poly, "u"));
    let p6 = derive_vanhove(6).unwrap();
    println!("L~6 leading: {}", bmlab::exact::poly_to_string(&p6.leading_poly, "u"));
    println!("derive 5-6: {:?}", t0.elapsed());

    // Inhomogeneity checks: L~n IvKM(1,n+1;1|u) = -(n+1)!/2^n ; IKvM -> n!/2^n
    let m = Moments::new(1e-12);
    for n in 1..=4u32 {
        let p = derive_vanhove(n).unwrap();
        let iv = MomentSpec::two_scale(MomentFamily::Iv, 1, n+1, 1, 0.5);
        let kv = MomentSpec::two_scale(MomentFamily::Kv, 1, n+1, 1, 0.5);
        let (viv, _) = p.apply_numeric(&m, &iv, 0.5, 1e-12).unwrap();
        let (vkv, _) = p.apply_numeric(&m, &kv, 0.5, 1e-12).unwrap();
        let fact = |k: u32| -> f64 { (1..=k).map(|x| x as f64).product() };
        let expect_iv = -fact(n+1) / 2f64.powi(n as i32);
        let expect_kv = fact(n) / 2f64.powi(n as i32);
        println!("n={n}: L~n IvKM(1,{};1|.5) = {viv:.10} vs {expect_iv} (res {:.2e}); IKvM = {vkv:.10} vs {expect_kv} (res {:.2e})",
                 n+1, (viv-expect_iv).abs(), (vkv-expect_kv).abs());
    }
    // Vacuum inhomogeneity: L~3 IKvM(0,5;1|u) = (3/2) ln u
    let p3 = derive_vanhove(3).unwrap();
    let kv05 = MomentSpec::two_scale(MomentFamily::Kv, 0, 5, 1, 0.5);
    let (v, _) = p3.apply_numeric(&m, &kv05, 0.5, 1e-12).unwrap();
    println!("L~3 IKvM(0,5;1|.5) = {v:.12} vs {:.12} (res {:.2e})", 1.5*0.5f64.ln(), (v-1.5*0.5f64.ln()).abs());
    let p4 = derive_vanhove(4).unwrap();
    let kv06 = MomentSpec::two_scale(MomentFamily::Kv, 0, 6, 1, 0.5);
    let (v, _) = p4.apply_numeric(&m, &kv06, 0.5, 1e-12).unwrap();
    println!("L~4 IKvM(0,6;1|.5) = {v:.12} vs {:.12} (res {:.2e})", 3.75*0.5f64.ln(), (v-3.75*0.5f64.ln()).abs());
    println!("total {:?}", t0.elapsed());
}
