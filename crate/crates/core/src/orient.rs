//! Good orientations (placeholder).
