//! Geometric realization of curves on the glued 4g-gon.

pub mod dd;
pub mod complement;
pub mod diagram;
pub mod geodesic;
pub mod intersection;
pub mod model;

pub use complement::ComplementReport;
pub use diagram::CurveDiagram;
pub use geodesic::Geodesic;
pub use intersection::SelfIntersection;
pub use model::PolygonModel;
