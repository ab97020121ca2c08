//! Rewrites a symmetrizer in the semistandard basis over Q and over Z.

use num_bigint::BigInt;
use num_rational::BigRational;
use supersym::{BasicTableau, MultiIndex, Partition, Signature, Straightener, Variant};

fn main() -> supersym::Result<()> {
    let sig = Signature::new(2, 1)?;
    let shape: Partition = "2,1".parse()?;
    let (i, j): (MultiIndex, MultiIndex) = ("3,1,2".parse()?, "2,1,3".parse()?);

    let q = Straightener::<BigRational>::new(BasicTableau::new(shape.clone()), sig);
    let res = q.straighten_pair(&i, &j)?;
    println!("T[{i}:{j}] =");
    for ((k, l), c) in &res.coeffs {
        println!(
            "  {} * T[{k}:{l}]",
            supersym::superalgebra::rational_string(c)
        );
    }
    assert_eq!(
        q.reexpand(&res)?,
        q.expander()
            .expand(&i, &j, Variant::default())?
            .to_rational()
    );

    let z = Straightener::<BigInt>::new(BasicTableau::new(shape), sig);
    let res = z.straighten_pair(&i, &j)?;
    println!("T{{{i}:{j}}} =");
    for ((k, l), c) in &res.coeffs {
        println!("  {c} * T{{{k}:{l}}}");
    }
    Ok(())
}
