use nalgebra::{Complex, DMatrix};
type C64 = Complex<f64>;
fn main() {
    let m = DMatrix::from_row_slice(4, 4, &[
        C64::new(0.125,0.), C64::new(0.,0.), C64::new(0.,0.), C64::new(-0.5,0.),
        C64::new(0.,0.), C64::new(0.375,0.), C64::new(0.,0.), C64::new(0.,0.),
        C64::new(0.,0.), C64::new(0.,0.), C64::new(0.375,0.), C64::new(0.,0.),
        C64::new(-0.5,0.), C64::new(0.,0.), C64::new(0.,0.), C64::new(0.125,0.),
    ]);
    let eig = nalgebra::linalg::SymmetricEigen::new(m.clone());
    let mut vals: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
    vals.sort_by(f64::total_cmp);
    println!("eigenvalues: {:?}", vals);
    let n = 4;
    let mut rec = DMatrix::from_element(n, n, C64::new(0.,0.));
    for k in 0..n {
        let v = eig.eigenvectors.column(k);
        let lam = eig.eigenvalues[k];
        for i in 0..n { for j in 0..n { rec[(i,j)] += v[i] * v[j].conj() * C64::new(lam, 0.); } }
    }
    let resid = (rec - &m).iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    println!("residual: {:e}", resid);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    println!("FRAC_1_SQRT_2^2 == 0.5 ? {}  ({:.20e})", h*h == 0.5, h*h);
    let a = DMatrix::from_fn(9, 9, |i, j| C64::new((i as f64 - j as f64)*0.3 + (i*j) as f64 * 0.01, if i<j {0.7} else if i>j {-0.7} else {0.0}));
    let ah = (&a + a.adjoint()) * C64::new(0.5, 0.0);
    let e2 = nalgebra::linalg::SymmetricEigen::new(ah.clone());
    let mut rec2 = DMatrix::from_element(9, 9, C64::new(0.,0.));
    for k in 0..9 {
        let v = e2.eigenvectors.column(k);
        for i in 0..9 { for j in 0..9 { rec2[(i,j)] += v[i]*v[j].conj()*C64::new(e2.eigenvalues[k],0.); } }
    }
    println!("residual9: {:e}", (rec2 - &ah).iter().map(|z| z.norm()).fold(0.0f64, f64::max));
    // orthonormality
    let vtv = e2.eigenvectors.adjoint() * &e2.eigenvectors;
    let mut worst = 0.0f64;
    for i in 0..9 { for j in 0..9 {
        let want = if i==j {1.0} else {0.0};
        worst = worst.max((vtv[(i,j)] - C64::new(want,0.)).norm());
    }}
    println!("orthonormality defect: {:e}", worst);
}
