//! Exact certification engine for the mode-stability analysis of the
//! self-similar wave map blowup profile.

pub mod exactalg;
pub mod case;
pub mod odeverify;
pub mod recurrence;
pub mod quasisolution;
pub mod certify;
pub mod casimir;
pub mod appendix;
