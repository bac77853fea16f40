//! Multimodal content-classification toolkit.
//!
//! Segments audio into periodic energy envelopes (EEs), extracts
//! saliency-guided visual regions of interest, encodes both modalities as
//! codebook histograms, and classifies videos with a linear margin
//! classifier plus a consecutive-run decision rule.
//!
//! Stages, bottom to top:
//! 1. [`audio`] — 36-dim per-frame features (MFCC, deltas, ZCR, energy, sub-bands)
//! 2. [`envelope`] — detection-function segmentation into EEs, periodic splitting,
//!    keyframe alignment
//! 3. [`saliency`] / [`roi`] — attention maps intersected with skin-color and
//!    no-face masks
//! 4. [`descriptors`] — upright 64-dim local descriptors inside the ROI,
//!    global color moments
//! 5. [`codebook`] — k-means vocabularies, per-EE semantic histograms,
//!    multimodal fusion
//! 6. [`classifier`] — margin scores, run-length video decision, ROC evaluation
//! 7. [`pipeline`] — dataset ingestion, training, classification, persistence

pub mod audio;
pub mod classifier;
pub mod codebook;
pub mod config;
pub mod descriptors;
pub mod envelope;
pub mod error;
pub mod pipeline;
pub mod raster;
pub mod roi;
pub mod saliency;
pub mod synth;

pub use config::PipelineConfig;
pub use error::{Error, Result};
