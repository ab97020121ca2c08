//! The two-sided action of S(m|n,r) on symmetrizers through the pairing xi.

use supersym::{
    act_left, act_right, BasicTableau, Expander, MultiIndex, Signature, Variant, XiElement,
};

fn main() -> supersym::Result<()> {
    let sig = Signature::new(1, 1)?;
    let e = Expander::new(BasicTableau::new("2".parse()?), sig);
    let (i, j): (MultiIndex, MultiIndex) = ("1,2".parse()?, "1,2".parse()?);
    let s = e.expand(&i, &j, Variant::default())?;
    println!("T[{i}:{j}] = {s}");
    for (u, v) in [("1,2", "1,2"), ("1,1", "1,2"), ("2,2", "1,2")] {
        let (u, v): (MultiIndex, MultiIndex) = (u.parse()?, v.parse()?);
        match XiElement::new(&u, &v, &sig) {
            Ok(x) => println!("xi[{}:{}]", x.left(), x.right()),
            Err(err) => println!("xi[{u}:{v}]: {err}"),
        }
        println!("  left  action: {}", act_left(&u, &v, &s, &sig)?);
        println!("  right action: {}", act_right(&u, &v, &s, &sig)?);
    }
    Ok(())
}
