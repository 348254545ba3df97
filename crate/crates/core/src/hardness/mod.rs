//! Hardness reduction (placeholder).
