//! Instance files.
//!
//! ```text
//! # family=snake
//! # param q=11
//! id,x,y,r
//! 0,1.0000000000000000e0,1.0000000000000000e0,6.6666666666666663e-1
//! ```
//!
//! Coordinates carry 17 significant digits, which round-trips every `f64`.
//! Lines start with `#` only in the leading provenance block.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use disksever_core::{Disk, Instance, Provenance};
use serde::Deserialize;

use crate::error::{HarnessError, Result};

pub const HEADER: &str = "id,x,y,r";

pub fn instance_to_string(inst: &Instance) -> String {
    let mut s = String::new();
    let p = &inst.provenance;
    writeln!(s, "# family={}", p.family).unwrap();
    if let Some(seed) = p.seed {
        writeln!(s, "# seed={seed}").unwrap();
    }
    for (k, v) in &p.params {
        writeln!(s, "# param {k}={v}").unwrap();
    }
    s.push_str(HEADER);
    s.push('\n');
    for d in inst.disks() {
        writeln!(s, "{},{:.16e},{:.16e},{:.16e}", d.id, d.cx, d.cy, d.r).unwrap();
    }
    s
}

fn parse_provenance(text: &str) -> Result<Provenance> {
    let mut p = Provenance::default();
    for line in text.lines().map_while(|l| l.strip_prefix('#')) {
        let line = line.trim();
        if let Some(f) = line.strip_prefix("family=") {
            p.family = f.to_string();
        } else if let Some(s) = line.strip_prefix("seed=") {
            let seed = s.parse().map_err(|_| HarnessError::input(format!("bad seed in provenance: {s:?}")))?;
            p.seed = Some(seed);
        } else if let Some((k, v)) = line.strip_prefix("param ").and_then(|kv| kv.split_once('=')) {
            p.params.push((k.to_string(), v.to_string()));
        }
    }
    Ok(p)
}

#[derive(Deserialize)]
struct Row {
    id: usize,
    x: f64,
    y: f64,
    r: f64,
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let provenance = parse_provenance(text)?;
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| HarnessError::input(format!("instance file: {e}")))?;
    if header.iter().collect::<Vec<_>>() != HEADER.split(',').collect::<Vec<_>>() {
        return Err(HarnessError::input(format!("instance file header must be `{HEADER}`")));
    }
    let mut disks = Vec::new();
    for (line, row) in reader.deserialize::<Row>().enumerate() {
        let row = row.map_err(|e| HarnessError::input(format!("instance file, record {}: {e}", line + 1)))?;
        disks.push(
            Disk::new(row.id, row.x, row.y, row.r)
                .map_err(|e| HarnessError::input(format!("instance file, record {}: {e}", line + 1)))?,
        );
    }
    Ok(Instance::new(disks, provenance)?)
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    parse_instance(&text).map_err(|e| match e {
        HarnessError::Input(m) => HarnessError::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn write_instance(path: &Path, inst: &Instance) -> Result<()> {
    write_text(path, &instance_to_string(inst))
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| HarnessError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use disksever_core::generators::{gen_lower_bound, gen_random, gen_snake};

    #[test]
    fn round_trip_is_exact() {
        for inst in [
            gen_snake(7).unwrap(),
            gen_random(50, 7.3, 9, false, 0).unwrap(),
            gen_lower_bound(60, 540, 0.05).unwrap().0,
        ] {
            let text = instance_to_string(&inst);
            let back = parse_instance(&text).unwrap();
            assert_eq!(back, inst);
            assert_eq!(instance_to_string(&back), text);
            assert!(!text.contains('\r'));
        }
    }

    #[test]
    fn malformed_files_are_input_errors() {
        for bad in [
            "",
            "x,y\n0,1,2\n",
            "id,x,y,r\n0,1,2\n",
            "id,x,y,r\n0,1,2,abc\n",
            "id,x,y,r\n0,1,2,-1\n",
            "id,x,y,r\n1,1,2,1\n",
            "id,x,y,r\n0,NaN,2,1\n",
            "# seed=abc\nid,x,y,r\n",
        ] {
            assert!(matches!(parse_instance(bad), Err(HarnessError::Input(_))), "{bad:?}");
        }
    }

    #[test]
    fn header_only_is_empty_instance() {
        assert!(parse_instance("# family=x\nid,x,y,r\n").unwrap().is_empty());
    }
}
