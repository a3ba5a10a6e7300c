//! Chern-Weil theory on transition cocycles (under construction).
