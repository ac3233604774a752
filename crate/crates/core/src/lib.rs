//! Boolean convolution of finitely supported probability measures through
//! exact F-transform algebra, quantitative Stieltjes–Perron mass brackets,
//! and the Boolean central limit theorem rate experiment.

pub mod error;
pub mod exact;
pub mod experiments;
pub mod measure;
pub mod poly;
pub mod roots;
pub mod transform;
pub mod boolean;
pub mod cli;
pub mod inversion;
pub mod quadrature;
pub mod report;

pub use error::{Error, Result};
pub use measure::{AtomicMeasure, Cdf};
pub use poly::{Polynomial, RationalFn};
pub use transform::{ComplexPoint, ReprData};
