//! Capelli operators: diagonal images and the matrix over semistandard pairs.

use supersym::capelli::CapelliEvaluator;
use supersym::{enumerate_semistandard, CapelliMatrix, Partition, Signature};

fn main() -> supersym::Result<()> {
    let sig = Signature::new(1, 1)?;
    for shape in ["1", "2", "1,1", "2,1"] {
        let shape: Partition = shape.parse()?;
        let ev = CapelliEvaluator::new(shape.clone(), sig);
        let canon = ev.colored_canonical()?;
        let ss = enumerate_semistandard(&shape, &sig);
        for k in &ss {
            for l in &ss {
                let img = ev.apply(k, l, k, l)?;
                let what = if img == canon {
                    "canonical"
                } else if img.is_zero() {
                    "zero"
                } else {
                    "other"
                };
                println!("{shape:>4}  C(T_{k}, T_{l}) T[{k}:{l}] is {what}");
            }
        }
        let mat = CapelliMatrix::compute(&shape, &sig)?;
        println!(
            "{shape:>4}  matrix rank {} of {}",
            mat.rank(),
            mat.pairs.len()
        );
    }
    Ok(())
}
