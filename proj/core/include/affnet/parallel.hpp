#ifndef AFFNET_PARALLEL_HPP
#define AFFNET_PARALLEL_HPP

namespace affnet {

/// Caps the worker pool used by data-parallel scans (census and global
/// wedge sums). 0 restores the default of one worker per hardware thread.
/// Results never depend on the worker count.
void set_parallelism(unsigned threads);
unsigned parallelism();

}  // namespace affnet

#endif
