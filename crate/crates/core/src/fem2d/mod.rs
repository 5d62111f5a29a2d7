//! 2-D thin-shell and reference solvers.
