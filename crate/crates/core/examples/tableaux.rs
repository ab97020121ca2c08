//! Semistandard supertableaux and the dimension count they explain.

use supersym::superalgebra::monomial_count;
use supersym::{enumerate_semistandard, BasicTableau, Partition, Signature};

fn main() -> supersym::Result<()> {
    let sig = Signature::new(2, 1)?;
    let r = 3;
    let mut total = 0;
    for shape in Partition::hooks(r, sig.m, sig.n) {
        let t = BasicTableau::new(shape.clone());
        let ss = enumerate_semistandard(&shape, &sig);
        println!("shape {shape}: {} semistandard tableaux", ss.len());
        for w in &ss {
            println!("{}\n", t.render(w));
        }
        total += ss.len() * ss.len();
    }
    println!(
        "sum of squares {total}, monomials of degree {r}: {}",
        monomial_count(&sig, r)
    );
    Ok(())
}
