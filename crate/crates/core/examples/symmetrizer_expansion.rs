//! Expands T[i:j] in all three forms and the modified T{i:j}.

use supersym::{
    symmetry_factors, BasicTableau, Expander, MultiIndex, Partition, Signature, Variant,
};

fn main() -> supersym::Result<()> {
    let sig = Signature::new(1, 1)?;
    let shape: Partition = "2,1".parse()?;
    let e = Expander::new(BasicTableau::new(shape), sig);
    let (i, j): (MultiIndex, MultiIndex) = ("1,1,2".parse()?, "1,2,2".parse()?);
    for v in Variant::ALL {
        println!("{:<16} T[{i}:{j}] = {}", v.name(), e.expand(&i, &j, v)?);
    }
    let f = symmetry_factors(e.tableau(), &i, &j, &sig)?;
    println!("r(T_i) = {}, c(T_j) = {}", f.r_factor, f.c_factor);
    println!("T{{{i}:{j}}} = {}", e.modified(&i, &j)?);

    // (2|0): the 2x2 minor
    let e = Expander::new(BasicTableau::new("1,1".parse()?), Signature::new(2, 0)?);
    let l: MultiIndex = "1,2".parse()?;
    println!("determinant: {}", e.expand(&l, &l, Variant::default())?);
    Ok(())
}
