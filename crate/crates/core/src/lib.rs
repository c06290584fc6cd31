pub mod ar;
pub mod bb;
pub mod error;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod serial;
pub mod tilting;
