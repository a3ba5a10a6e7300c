//! p-adic regulator pipeline (under construction).
