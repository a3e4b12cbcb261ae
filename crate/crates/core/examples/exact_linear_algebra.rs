//! The exact linear algebra underneath: fraction-free determinants,
//! characteristic polynomials, the Jacobi oracle and the restriction to
//! traceless directions.

use gstab::exact::{determinant, jacobi::jacobi_eigenvalues};
use gstab::prelude::*;

fn main() -> gstab::Result<()> {
    // the 4x4 Hilbert matrix
    let h = SymMatrix::from_upper_fn(4, |i, j| rat(1, (i + j + 1) as i64));
    println!("det(H_4) = {}", determinant(&h.rows())?);

    let p = characteristic_polynomial(&h.rows())?;
    println!("det(H_4 - x) = {p}");
    for x in [int(0), int(1), rat(1, 2)] {
        assert_eq!(p.eval(&x), charpoly_eval(&h, &x));
    }

    let eig = jacobi_eigenvalues(h.to_f64_rows(), 1e-14)?;
    let eig: Vec<String> = eig.iter().map(|x| format!("{x:.6e}")).collect();
    println!("Jacobi eigenvalues: {}", eig.join(", "));

    // block-scalar form on parts of dimensions 2, 3, 5 with N 1 = 0
    let dims = DimVector::new(vec![2, 3, 5])?;
    let n = SymMatrix::from_rows(vec![
        vec![int(5), int(-2), int(-3)],
        vec![int(-2), int(4), int(-2)],
        vec![int(-3), int(-2), int(5)],
    ])?;
    let w = WeightedForm::with_dims(n, &dims)?;
    println!(
        "\nweighted trace {}, determinant {}",
        w.trace(),
        w.determinant()
    );
    println!("spectrum {:.6?}", w.eigen_numeric(1e-14)?);
    let r = w.restrict_traceless()?;
    println!(
        "on traceless directions: order {}, spectrum {:.6?}",
        r.order(),
        r.eigen_numeric(1e-14)?
    );
    Ok(())
}
