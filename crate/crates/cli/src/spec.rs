//! Group-spec strings such as `"4;2,2"` or `"S3;2"`.
//!
//! Blocks are separated by `;` and each block is either the name of a
//! library group (`S3`, `D4`, `Q8`) or a comma-separated list of positive
//! cyclic orders whose product is normalized to invariant factors. Whitespace
//! around tokens is ignored. The empty string denotes the empty structure.

use frobrel::{normalize_invariant_factors, GroupSpec, NamedGroup, StructureSpec};

pub fn parse_structure_spec(text: &str) -> Result<StructureSpec, String> {
    if text.trim().is_empty() {
        return Ok(StructureSpec::default());
    }
    text.split(';')
        .enumerate()
        .map(|(i, block)| parse_block(block.trim()).map_err(|e| format!("block {}: {e}", i + 1)))
        .collect()
}

fn parse_block(block: &str) -> Result<GroupSpec, String> {
    if block.is_empty() {
        return Err("empty block".into());
    }
    if let Some(g) = NamedGroup::from_name(block) {
        return Ok(g.into());
    }
    let orders = block
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            match tok.parse::<usize>() {
                Ok(m) if m > 0 => Ok(m),
                _ => Err(format!(
                    "{tok:?} is neither a positive integer nor one of S3, D4, Q8"
                )),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    normalize_invariant_factors(&orders)
        .map(Into::into)
        .map_err(|e| e.to_string())
}
