//! 2-D triangular meshes of the shield benchmark.
