//! Packaged reference inputs.

/// Ten generators of a Gorenstein artinian ideal in four variables with
/// h-vector `1 4 9 13 13 9 4 1`.
pub const EXAMPLE1_IDEAL: &str = include_str!("../data/example1.ideal");

/// `(x1^2, x2^4, x3^3, x4^4)`
pub const EXAMPLE1_COMPLETE_INTERSECTION: &str = include_str!("../data/example1_ci.ideal");

/// Dividing [`EXAMPLE1_COMPLETE_INTERSECTION`] by this form gives
/// [`EXAMPLE1_IDEAL`].
pub const EXAMPLE1_DIVISOR: &str = "x1*x2 - x3*x4";

/// Graded Betti diagram of [`EXAMPLE1_IDEAL`]; entry `(r, c)` is the rank of
/// `R(-r-c)` in homological position `c`.
pub const EXAMPLE1_DIAGRAM: &str = "\
1  -  -  -  -
-  1  -  -  -
-  3  4  1  -
-  4  5  1  -
-  1  5  4  -
-  1  4  3  -
-  -  -  1  -
-  -  -  -  1
";

/// Hilbert function of the quotient by [`EXAMPLE1_IDEAL`].
pub const EXAMPLE1_HVECTOR: [u64; 8] = [1, 4, 9, 13, 13, 9, 4, 1];

/// `(degree, count)` of minimal generators of [`EXAMPLE1_IDEAL`].
pub const EXAMPLE1_MINGENS: [(u32, u64); 5] = [(2, 1), (3, 3), (4, 4), (5, 1), (6, 1)];

pub const EXAMPLE1_BETTI_TOTALS: [u64; 5] = [1, 10, 18, 10, 1];
