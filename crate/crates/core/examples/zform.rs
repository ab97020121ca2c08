//! Divided powers of superderivations on modified symmetrizers.

use num_rational::BigRational;
use supersym::derivations::diag_binomial_check;
use supersym::{
    divided_power, standard_generators, zform_closure_check, BasicTableau, DerivationSpec,
    Expander, MultiIndex, Partition, Side, Signature, Symbol,
};

fn main() -> supersym::Result<()> {
    let sig = Signature::new(2, 1)?;
    let shape: Partition = "2".parse()?;
    let e = Expander::new(BasicTableau::new(shape.clone()), sig);
    let (i, j): (MultiIndex, MultiIndex) = ("2,2".parse()?, "1,3".parse()?);
    let s = e.modified(&i, &j)?.to_rational();
    let d = DerivationSpec::new(Symbol::Plain(1), Symbol::Plain(2), Side::Left, &sig)?;
    for t in 1..=2 {
        let img: supersym::FormalSum<BigRational> = divided_power(&d, t, &s, &sig)?;
        println!("{d}^({t}) T{{{i}:{j}}} = {img}");
    }

    let ops = standard_generators(&sig, 2);
    for shape in Partition::hooks(2, sig.m, sig.n) {
        let closure = zform_closure_check(&shape, &sig, &ops)?;
        let diag = diag_binomial_check(&shape, &sig)?;
        println!(
            "{shape}: {} closure checks, {} binomial checks, clean: {}",
            closure.checked,
            diag.checked,
            closure.is_clean() && diag.is_clean()
        );
    }
    Ok(())
}
