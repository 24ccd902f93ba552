//! Prune a random read-3 sequence to a per-read-monotone, regularly
//! interleaving subsequence and decompose it into segments.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use readk::abp::random::{random_read_order, ReadShape};
use readk::sequences::{
    concat_decompose, is_regularly_interleaving, per_read_monotone_subset, regularly_interleaving_subset,
};
use readk::ReadSequence;

fn main() -> readk::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = ReadSequence::from_labels(&random_read_order(&mut rng, 40, 3, ReadShape::Shuffled))?;
    println!("{} variables, read {} times", s.n(), s.k());
    let mono = per_read_monotone_subset(&s);
    let sm = s.restrict(&mono);
    println!("per-read-monotone: {} variables", mono.len());
    let reg = regularly_interleaving_subset(&sm)?;
    let sr = sm.restrict(&reg);
    println!("regularly interleaving: {} variables", reg.len());
    println!("pruned sequence {}", sr);
    for p in is_regularly_interleaving(&sr).expect("pruned sequence interleaves regularly") {
        println!("  reads {:?}: {} blocks", p.reads, p.blocks.len());
    }
    for seg in concat_decompose(&sr)? {
        println!("  segment {:?}: reads {:?} {:?}", seg.range, seg.reads, seg.direction);
    }
    Ok(())
}
