//! Ranks of the semistandard modified symmetrizers over Q, F_3 and F_5.

use supersym::verify::{modular_rank_report, rank_report};
use supersym::{Partition, Signature};

fn main() -> supersym::Result<()> {
    for (m, n, r) in [(1, 1, 2), (1, 1, 3), (2, 1, 3)] {
        let sig = Signature::new(m, n)?;
        for shape in Partition::hooks(r, m, n) {
            let q = rank_report(&shape, &sig)?;
            let mut line = format!(
                "({m}|{n}) {shape:<6} #SSYT^2 = {:<3} Q: {}",
                q["ssyt_squared"], q["rank"]
            );
            for p in [3, 5] {
                let v = modular_rank_report(&shape, &sig, p)?;
                line += &format!("  F_{p}: {}", v["rank"]);
            }
            println!("{line}");
        }
    }
    Ok(())
}
