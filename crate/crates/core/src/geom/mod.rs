//! Geometry (placeholder).
