use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::summary::Totals;
use super::{Fault, Mode};

pub(crate) const CHECKPOINT_VERSION: u32 = 1;

/// Everything a resumed run must agree on with the run that wrote the file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct Fingerprint {
    pub n: usize,
    pub mode: Mode,
    pub k_max: usize,
    pub threshold: usize,
    pub seed: u64,
    pub sample: usize,
    pub source: String,
    pub stable_output: bool,
    pub fault: Option<Fault>,
}

/// A pruned class held in the audit sample.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub(crate) struct Sampled {
    pub key: u64,
    pub seq: u64,
    pub graph6: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct Checkpoint {
    pub version: u32,
    pub fingerprint: Fingerprint,
    /// Length of the report that matches `totals`; anything beyond is cut.
    pub report_bytes: u64,
    /// Source resume point: a generator token or `lines:<count>`.
    pub position: String,
    pub next_seq: u64,
    pub totals: Totals,
    pub sample: Vec<Sampled>,
    pub seconds: f64,
}

impl Checkpoint {
    pub fn load(path: &Path) -> io::Result<Option<Checkpoint>> {
        match fs::read(path) {
            Ok(bytes) => serde_json::from_slice(&bytes)
                .map(Some)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e)),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Writes to a sibling temporary file, syncs it, and renames it over `path`.
    pub fn store(&self, path: &Path) -> io::Result<()> {
        let mut tmp = PathBuf::from(path);
        let mut name = path.file_name().unwrap_or_default().to_os_string();
        name.push(".tmp");
        tmp.set_file_name(name);
        {
            let mut f = fs::File::create(&tmp)?;
            serde_json::to_writer(&mut f, self).map_err(io::Error::other)?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn store_and_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.ckpt");
        assert!(Checkpoint::load(&path).unwrap().is_none());
        let c = Checkpoint {
            version: CHECKPOINT_VERSION,
            fingerprint: Fingerprint {
                n: 5,
                mode: Mode::Audit,
                k_max: 4,
                threshold: 3,
                seed: 7,
                sample: 10,
                source: "generator".into(),
                stable_output: true,
                fault: None,
            },
            report_bytes: 12,
            position: "00".into(),
            next_seq: 3,
            totals: Totals::default(),
            sample: vec![Sampled {
                key: 1,
                seq: 2,
                graph6: "D?{".into(),
            }],
            seconds: 0.5,
        };
        c.store(&path).unwrap();
        let back = Checkpoint::load(&path).unwrap().unwrap();
        assert_eq!(back.fingerprint, c.fingerprint);
        assert_eq!(back.sample, c.sample);
        assert!(!dir.path().join("run.ckpt.tmp").exists());
        fs::write(&path, "{").unwrap();
        assert!(Checkpoint::load(&path).is_err());
    }
}
