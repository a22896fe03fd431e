use std::num::NonZeroUsize;
use std::thread;

use semilinear_ast::action::TripleLabeler;
use semilinear_ast::ast::TriplePartition;

/// Default worker count: the available parallelism, or 1.
pub fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// Labels `Ω³` with `workers` threads, each taking a contiguous range of
/// first coordinates. Every label depends only on its triple, so the result
/// is the same for any worker count.
pub fn label_parallel(labeler: &TripleLabeler, workers: usize) -> TriplePartition {
    let size = labeler.omega_size() as usize;
    let slab = labeler.slab_len();
    let mut labels = vec![0u8; slab * size];
    let workers = workers.clamp(1, size.max(1));
    let per_worker = size.div_ceil(workers);
    thread::scope(|scope| {
        for (chunk_index, chunk) in labels.chunks_mut(per_worker * slab).enumerate() {
            scope.spawn(move || {
                let first = chunk_index * per_worker;
                for (offset, out) in chunk.chunks_mut(slab).enumerate() {
                    labeler.label_slab((first + offset) as u32, out);
                }
            });
        }
    });
    TriplePartition::from_labels(labeler.omega_size(), labels)
        .expect("labeler output is a partition")
}
