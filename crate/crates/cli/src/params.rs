//! Command-line list syntax. Indices are 1-based: `"5,2,1,3,4"` is a
//! permutation and `"6,4,3|5,2,1"` gives one ordering per block.

use anyhow::{bail, Context};

pub fn parse_list<T: std::str::FromStr>(s: &str) -> anyhow::Result<Vec<T>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<T>().ok().with_context(|| format!("bad list element {t:?} in {s:?}"))
        })
        .collect()
}

pub fn parse_blocks(s: &str) -> anyhow::Result<Vec<Vec<usize>>> {
    let blocks: Vec<Vec<usize>> = s.split('|').map(parse_list).collect::<anyhow::Result<_>>()?;
    if blocks.iter().any(Vec::is_empty) {
        bail!("empty block in {s:?}");
    }
    Ok(blocks)
}

/// Comma list of row indices, e.g. `"0,3"`.
pub fn parse_pair(s: &str) -> anyhow::Result<(usize, usize)> {
    match parse_list::<usize>(s)?.as_slice() {
        [g, k] => Ok((*g, *k)),
        _ => bail!("expected two row indices \"g,k\", got {s:?}"),
    }
}

/// Inclusive integer range `a..b` or a comma list.
pub fn parse_usize_grid(s: &str) -> anyhow::Result<Vec<usize>> {
    if let Some((a, b)) = s.split_once("..") {
        let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
        if a > b {
            bail!("empty range {s:?}");
        }
        return Ok((a..=b).collect());
    }
    parse_list(s)
}

/// Comma list of SNR values in dB; `inf` means a noiseless channel.
pub fn parse_snr_grid(s: &str) -> anyhow::Result<Vec<f64>> {
    let v: Vec<f64> = parse_list(s)?;
    if v.iter().any(|x| x.is_nan() || *x == f64::NEG_INFINITY) {
        bail!("SNR values must be finite or inf");
    }
    Ok(v)
}
