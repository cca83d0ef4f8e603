pub mod contour;
pub mod control;
pub mod error;
pub mod fode;
pub mod fractional;
pub mod image;
pub mod mittag_leffler;
pub mod params;
pub mod quadrature;
pub mod signal;
pub mod special;
pub mod transform;
pub mod verify;

pub use error::{Result, SadikError};
pub use fractional::{DerivativeData, FracOptions, FracOrder, ProductRule};
pub use image::{eval_image, DenomFactor, Exponent, ImageArg, ImageTerm, TransformImage};
pub use mittag_leffler::MLSpec;
pub use params::SadikParams;
pub use signal::{linspace, SampledSignal};
pub use transform::{image_of, KnownFunction};
