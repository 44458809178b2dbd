//! Scan checkpointing: a small plain-text file carrying the resume point,
//! the cumulative counters, and a hash of the scan configuration.
//!
//! The config hash makes corruption and misuse evident: a checkpoint written
//! by one configuration refuses to resume another. Counters are cumulative so
//! a resumed scan ends with the same summary as an uninterrupted one.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

/// FNV-1a over the canonical config string; stable across builds.
pub fn fnv1a64(data: &str) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in data.as_bytes() {
        hash ^= *byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub config_hash: u64,
    pub last_completed_prime: u64,
    pub blocks_done: u64,
    pub scanned: u64,
    pub checked: u64,
    pub contradictions: u64,
    pub wieferich: Vec<u64>,
}

impl Checkpoint {
    pub fn fresh(config_hash: u64) -> Checkpoint {
        Checkpoint {
            config_hash,
            last_completed_prime: 0,
            blocks_done: 0,
            scanned: 0,
            checked: 0,
            contradictions: 0,
            wieferich: Vec::new(),
        }
    }

    fn render(&self) -> String {
        let mut s = String::new();
        writeln!(s, "config={:016x}", self.config_hash).unwrap();
        writeln!(s, "last_completed_prime={}", self.last_completed_prime).unwrap();
        writeln!(s, "blocks_done={}", self.blocks_done).unwrap();
        writeln!(s, "scanned={}", self.scanned).unwrap();
        writeln!(s, "checked={}", self.checked).unwrap();
        writeln!(s, "contradictions={}", self.contradictions).unwrap();
        writeln!(
            s,
            "wieferich={}",
            self.wieferich
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
        .unwrap();
        s
    }

    fn parse(text: &str) -> Option<Checkpoint> {
        let mut cp = Checkpoint::fresh(0);
        let mut seen = 0u32;
        for line in text.lines() {
            let (key, value) = line.split_once('=')?;
            match key {
                "config" => cp.config_hash = u64::from_str_radix(value, 16).ok()?,
                "last_completed_prime" => cp.last_completed_prime = value.parse().ok()?,
                "blocks_done" => cp.blocks_done = value.parse().ok()?,
                "scanned" => cp.scanned = value.parse().ok()?,
                "checked" => cp.checked = value.parse().ok()?,
                "contradictions" => cp.contradictions = value.parse().ok()?,
                "wieferich" => {
                    cp.wieferich = if value.is_empty() {
                        Vec::new()
                    } else {
                        value
                            .split(',')
                            .map(|v| v.parse())
                            .collect::<Result<_, _>>()
                            .ok()?
                    }
                }
                _ => return None,
            }
            seen += 1;
        }
        (seen == 7).then_some(cp)
    }
}

/// Write the checkpoint atomically (temp file + rename in the same directory).
pub fn save(path: &Path, cp: &Checkpoint) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, cp.render())?;
    std::fs::rename(&tmp, path)
}

/// Outcome of reading a checkpoint file.
pub enum Loaded {
    /// Valid and matching the current configuration.
    Resume(Checkpoint),
    /// Present but written by a different configuration.
    ConfigMismatch,
    /// Present but unreadable as a checkpoint.
    Corrupt,
}

pub fn load(path: &Path, expected_hash: u64) -> io::Result<Loaded> {
    let text = std::fs::read_to_string(path)?;
    Ok(match Checkpoint::parse(&text) {
        None => Loaded::Corrupt,
        Some(cp) if cp.config_hash != expected_hash => Loaded::ConfigMismatch,
        Some(cp) => Loaded::Resume(cp),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_is_stable() {
        // Reference FNV-1a values.
        assert_eq!(fnv1a64(""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a64("a"), 0xaf63_dc4c_8601_ec8c);
        assert_ne!(fnv1a64("from=3;to=10"), fnv1a64("from=3;to=11"));
    }

    #[test]
    fn round_trip() {
        let cp = Checkpoint {
            config_hash: 0xdead_beef,
            last_completed_prime: 65_521,
            blocks_done: 1,
            scanned: 6_542,
            checked: 66,
            contradictions: 0,
            wieferich: vec![1093, 3511],
        };
        assert_eq!(Checkpoint::parse(&cp.render()), Some(cp.clone()));
        let empty = Checkpoint::fresh(7);
        assert_eq!(Checkpoint::parse(&empty.render()), Some(empty));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Checkpoint::parse("not a checkpoint").is_none());
        assert!(Checkpoint::parse("config=zzz\n").is_none());
        // Truncated files are rejected, not half-read.
        assert!(Checkpoint::parse("config=0000000000000001\nscanned=5\n").is_none());
    }
}
