//! The `AST1` partition artifact.
//!
//! All integers are little-endian:
//!
//! ```text
//! "AST1"
//! u32 p, u32 alpha, u32 omega, u32 k, u8 variant (0 = asl, 1 = agl)
//! u32 m, then m x u32 polynomial coefficients (constant term first)
//! u32 |Ω|, u32 class count c, then c x u64 class sizes
//! u64 r, then r runs of (u8 label, u32 length)
//! ```
//!
//! Runs longer than `u32::MAX` are split. The decoder rejects trailing bytes
//! and any header that disagrees with the rebuilt field or the payload.

use std::io::{self, Read, Write};

use semilinear_ast::action::{GroupSpec, Variant};
use semilinear_ast::ast::TriplePartition;

pub const MAGIC: &[u8; 4] = b"AST1";

#[derive(Debug, thiserror::Error)]
pub enum ArtifactError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("not an AST1 artifact: {0}")]
    Format(String),
}

fn format_err<T>(why: impl Into<String>) -> Result<T, ArtifactError> {
    Err(ArtifactError::Format(why.into()))
}

pub fn variant_byte(v: Variant) -> u8 {
    match v {
        Variant::Asl => 0,
        Variant::Agl => 1,
    }
}

/// Encodes `partition` for `spec`.
pub fn encode(spec: &GroupSpec, partition: &TriplePartition) -> Vec<u8> {
    let t = spec.tower();
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    for v in [t.characteristic(), t.alpha(), t.omega(), spec.k() as u32] {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out.push(variant_byte(spec.variant()));
    out.extend_from_slice(&(t.polynomial().len() as u32).to_le_bytes());
    for &c in t.polynomial() {
        out.extend_from_slice(&c.to_le_bytes());
    }
    out.extend_from_slice(&partition.omega_size().to_le_bytes());
    out.extend_from_slice(&(partition.class_count() as u32).to_le_bytes());
    for &size in partition.class_sizes() {
        out.extend_from_slice(&size.to_le_bytes());
    }
    let runs = runs(partition.labels());
    out.extend_from_slice(&(runs.len() as u64).to_le_bytes());
    for (label, len) in runs {
        out.push(label);
        out.extend_from_slice(&len.to_le_bytes());
    }
    out
}

fn runs(labels: &[u8]) -> Vec<(u8, u32)> {
    let mut out: Vec<(u8, u32)> = Vec::new();
    for &l in labels {
        match out.last_mut() {
            Some((label, len)) if *label == l && *len < u32::MAX => *len += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

pub fn write(spec: &GroupSpec, partition: &TriplePartition, w: &mut impl Write) -> io::Result<()> {
    w.write_all(&encode(spec, partition))
}

struct Cursor<'a> {
    bytes: &'a [u8],
}

impl Cursor<'_> {
    fn take(&mut self, n: usize) -> Result<&[u8], ArtifactError> {
        if self.bytes.len() < n {
            return format_err("truncated");
        }
        let (head, tail) = self.bytes.split_at(n);
        self.bytes = tail;
        Ok(head)
    }

    fn u8(&mut self) -> Result<u8, ArtifactError> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32, ArtifactError> {
        Ok(u32::from_le_bytes(
            self.take(4)?.try_into().expect("4 bytes"),
        ))
    }

    fn u64(&mut self) -> Result<u64, ArtifactError> {
        Ok(u64::from_le_bytes(
            self.take(8)?.try_into().expect("8 bytes"),
        ))
    }
}

/// Decodes an artifact and rebuilds its spec.
pub fn decode(bytes: &[u8]) -> Result<(GroupSpec, TriplePartition), ArtifactError> {
    let mut c = Cursor { bytes };
    if c.take(4)? != MAGIC {
        return format_err("bad magic");
    }
    let (p, alpha, omega, k) = (c.u32()?, c.u32()?, c.u32()?, c.u32()?);
    let variant = match c.u8()? {
        0 => Variant::Asl,
        1 => Variant::Agl,
        b => return format_err(format!("unknown variant byte {b}")),
    };
    let spec = GroupSpec::from_parameters(variant, p, alpha, omega, k as usize)
        .or_else(|e| format_err(format!("invalid spec in header: {e}")))?;
    let m = c.u32()? as usize;
    if m > 64 {
        return format_err("polynomial too long");
    }
    let poly = (0..m).map(|_| c.u32()).collect::<Result<Vec<_>, _>>()?;
    if poly != spec.tower().polynomial() {
        return format_err("defining polynomial differs from the Conway polynomial");
    }
    let size = c.u32()?;
    if size != spec.omega_size() {
        return format_err("|Ω| differs from n^k");
    }
    let classes = c.u32()? as usize;
    if classes > 256 {
        return format_err("more than 256 classes");
    }
    let sizes = (0..classes)
        .map(|_| c.u64())
        .collect::<Result<Vec<_>, _>>()?;
    let total = u64::from(size).pow(3);
    if sizes.iter().sum::<u64>() != total {
        return format_err("class sizes do not sum to |Ω|³");
    }
    let run_count = c.u64()?;
    if run_count > total {
        return format_err("more runs than triples");
    }
    let mut labels = Vec::with_capacity(total as usize);
    for _ in 0..run_count {
        let (label, len) = (c.u8()?, c.u32()?);
        if labels.len() as u64 + u64::from(len) > total {
            return format_err("payload longer than |Ω|³");
        }
        labels.resize(labels.len() + len as usize, label);
    }
    if !c.bytes.is_empty() {
        return format_err("trailing bytes");
    }
    let partition =
        TriplePartition::from_labels(size, labels).or_else(|e| format_err(e.to_string()))?;
    if partition.class_sizes() != sizes.as_slice() {
        return format_err("class sizes disagree with the payload");
    }
    Ok((spec, partition))
}

pub fn read(r: &mut impl Read) -> Result<(GroupSpec, TriplePartition), ArtifactError> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    decode(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use semilinear_ast::action::TripleLabeler;

    fn sample() -> (GroupSpec, TriplePartition) {
        let spec = GroupSpec::from_parameters(Variant::Asl, 2, 2, 1, 2).unwrap();
        let p = TripleLabeler::new(&spec).unwrap().label_all();
        (spec, p)
    }

    #[test]
    fn round_trip() {
        let (spec, p) = sample();
        let bytes = encode(&spec, &p);
        assert_eq!(&bytes[..4], b"AST1");
        let (spec2, p2) = decode(&bytes).unwrap();
        assert_eq!(p2, p);
        assert_eq!(spec2.omega_size(), spec.omega_size());
        assert_eq!(spec2.tower().polynomial(), [1, 1, 1]);
    }

    #[test]
    fn rejects_corruption() {
        let (spec, p) = sample();
        let bytes = encode(&spec, &p);
        assert!(decode(&bytes[..bytes.len() - 1]).is_err());
        let mut extra = bytes.clone();
        extra.push(0);
        assert!(decode(&extra).is_err());
        let mut magic = bytes.clone();
        magic[3] = b'2';
        assert!(decode(&magic).is_err());
        let mut variant = bytes;
        variant[20] = 7;
        assert!(decode(&variant).is_err());
    }

    #[test]
    fn long_runs_split() {
        assert_eq!(runs(&[1, 1, 2]), [(1, 2), (2, 1)]);
    }
}
