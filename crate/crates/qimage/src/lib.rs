//! Hybrid quantum-classical image classification toolkit.
//!
//! Grayscale images are encoded with one of three quantum representations —
//! patch-wise QCNN feature extraction, FRQI, or NEQR — on a built-in
//! statevector simulator. Measured features feed a from-scratch dense
//! classifier, and a benchmark harness compares accuracy, loss and runtime
//! against a small classical CNN baseline and a raw-pixel MLP.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `qimage` binary for the end-to-end pipeline.

pub mod bench;
pub mod data;
pub mod encode;
pub mod error;
pub mod image;
pub mod nn;
pub mod noise;
pub mod sim;

pub use error::{Error, Result};
pub use image::GrayImage;
