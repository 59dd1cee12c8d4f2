pub mod coef;
pub mod graded;
pub mod laurent;
pub mod modp;
pub mod numbers;
pub mod ratfunc;
pub mod series;
pub mod zpoly;

pub use coef::{rat, rat_int, BigRat, Coef};
pub use laurent::{LaurentPoly2, Vars};
pub use ratfunc::RatFunc2;
pub use series::TruncSeries;
