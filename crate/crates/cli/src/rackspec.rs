//! Parsing of `--rack` arguments.

use std::path::Path;

use ldlab::laver::LaverTable;
use ldlab::magma::{affine_quandle, dihedral_quandle, FiniteMagma};
use ldlab::{Error, Result};

fn num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Domain(format!("bad {what} {s:?}")))
}

/// `dihedral:k`, `affine:m:t`, `laver:n`, `trivial:m`, `cyclic:m` or `file:path.csv`.
pub fn parse(spec: &str, max_entries: Option<usize>) -> Result<FiniteMagma> {
    let (kind, rest) = spec.split_once(':').ok_or_else(|| Error::Domain(format!("bad rack spec {spec:?}")))?;
    let guard = |size: usize| match max_entries {
        _ if size == 0 => Err(Error::Domain("carrier must be nonempty".into())),
        Some(cap) if size.saturating_mul(size) > cap => {
            Err(Error::Resource(format!("a {size}x{size} table exceeds LDLAB_MAX_MEM")))
        }
        _ => Ok(()),
    };
    match kind {
        "dihedral" => {
            let k = num(rest, "order")?;
            guard(k)?;
            dihedral_quandle(k)
        }
        "affine" => {
            let (m, t) = rest.split_once(':').ok_or_else(|| Error::Domain("affine needs m:t".into()))?;
            let m = num(m, "modulus")?;
            guard(m)?;
            affine_quandle(m, num(t, "multiplier")?)
        }
        "laver" => {
            let n: u32 = num(rest, "index")?;
            if n >= usize::BITS / 2 {
                return Err(Error::Resource(format!("A_{n} is too large")));
            }
            guard(1 << n)?;
            Ok(LaverTable::new(n)?.to_magma())
        }
        "trivial" => {
            let m = num(rest, "size")?;
            guard(m)?;
            Ok(FiniteMagma::trivial_rack(m))
        }
        "cyclic" => {
            let m = num(rest, "size")?;
            guard(m)?;
            Ok(FiniteMagma::cyclic_rack(m))
        }
        "file" => from_csv(Path::new(rest)),
        _ => Err(Error::Domain(format!("unknown rack family {kind:?}"))),
    }
}

/// One row per line, comma-separated 1-based values.
pub fn from_csv(path: &Path) -> Result<FiniteMagma> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(|x| num(x, "table entry")).collect::<Result<Vec<usize>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteMagma::from_rows(&rows)?.with_label(path.display().to_string()))
}
