//! Construction helpers: complex and quaternionic matrices realified to
//! real matrices, so every built-in algebra is a real matrix algebra.

use nalgebra::DMatrix;
use num_complex_free::Cx;

/// Minimal complex scalar; avoids pulling a complex-number crate for the
/// handful of constructions below.
pub(crate) mod num_complex_free {
    #[derive(Debug, Clone, Copy, PartialEq)]
    pub struct Cx {
        pub re: f64,
        pub im: f64,
    }

    impl Cx {
        pub const ZERO: Cx = Cx { re: 0.0, im: 0.0 };
        pub const ONE: Cx = Cx { re: 1.0, im: 0.0 };
        pub const I: Cx = Cx { re: 0.0, im: 1.0 };

        pub fn new(re: f64, im: f64) -> Self {
            Self { re, im }
        }

        pub fn conj(self) -> Self {
            Self::new(self.re, -self.im)
        }

        pub fn scale(self, s: f64) -> Self {
            Self::new(self.re * s, self.im * s)
        }
    }

    impl std::ops::Add for Cx {
        type Output = Cx;
        fn add(self, o: Cx) -> Cx {
            Cx::new(self.re + o.re, self.im + o.im)
        }
    }

    impl std::ops::Sub for Cx {
        type Output = Cx;
        fn sub(self, o: Cx) -> Cx {
            Cx::new(self.re - o.re, self.im - o.im)
        }
    }

    impl std::ops::Mul for Cx {
        type Output = Cx;
        fn mul(self, o: Cx) -> Cx {
            Cx::new(
                self.re * o.re - self.im * o.im,
                self.re * o.im + self.im * o.re,
            )
        }
    }

    impl std::ops::Neg for Cx {
        type Output = Cx;
        fn neg(self) -> Cx {
            Cx::new(-self.re, -self.im)
        }
    }
}

/// Dense complex matrix as a flat buffer.
#[derive(Debug, Clone)]
pub(crate) struct CxMat {
    pub n: usize,
    pub data: Vec<Cx>,
}

impl CxMat {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Cx::ZERO; n * n],
        }
    }

    pub fn at(&self, i: usize, j: usize) -> Cx {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cx) {
        self.data[i * self.n + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: Cx) {
        let cur = self.at(i, j);
        self.set(i, j, cur + v);
    }

    /// Realify: z = x + iy becomes the 2x2 block [[x, -y], [y, x]].
    pub fn realify(&self) -> DMatrix<f64> {
        let n = self.n;
        let mut out = DMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let z = self.at(i, j);
                out[(2 * i, 2 * j)] = z.re;
                out[(2 * i, 2 * j + 1)] = -z.im;
                out[(2 * i + 1, 2 * j)] = z.im;
                out[(2 * i + 1, 2 * j + 1)] = z.re;
            }
        }
        out
    }
}

/// A quaternion `a + b·j` with complex components `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Quat {
    pub a: Cx,
    pub b: Cx,
}

impl Quat {
    pub const ONE: Quat = Quat {
        a: Cx::ONE,
        b: Cx::ZERO,
    };
    pub const I: Quat = Quat {
        a: Cx::I,
        b: Cx::ZERO,
    };
    pub const J: Quat = Quat {
        a: Cx::ZERO,
        b: Cx::ONE,
    };
    pub const K: Quat = Quat {
        a: Cx::ZERO,
        b: Cx::I,
    };

    /// Quaternionic conjugate.
    pub fn conj(self) -> Quat {
        Quat {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    pub fn neg(self) -> Quat {
        Quat {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// Quaternionic n×n matrix via its 2n×2n complex representation:
/// entry `a + b j` expands to the block [[a, b], [-conj(b), conj(a)]].
pub(crate) fn quat_to_complex(n: usize, entries: &[(usize, usize, Quat)]) -> CxMat {
    let mut m = CxMat::zeros(2 * n);
    for &(i, j, q) in entries {
        m.add_at(2 * i, 2 * j, q.a);
        m.add_at(2 * i, 2 * j + 1, q.b);
        m.add_at(2 * i + 1, 2 * j, -q.b.conj());
        m.add_at(2 * i + 1, 2 * j + 1, q.a.conj());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realified_multiplication_commutes() {
        // (MN) realified == M realified * N realified
        let mut m = CxMat::zeros(2);
        m.set(0, 1, Cx::new(1.0, 2.0));
        m.set(1, 0, Cx::new(-1.0, 0.5));
        let mut n = CxMat::zeros(2);
        n.set(0, 0, Cx::I);
        n.set(1, 1, Cx::new(0.25, -0.75));
        let mr = m.realify();
        let nr = n.realify();
        let mut prod = CxMat::zeros(2);
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Cx::ZERO;
                for k in 0..2 {
                    acc = acc + m.at(i, k) * n.at(k, j);
                }
                prod.set(i, j, acc);
            }
        }
        assert!((prod.realify() - mr * nr).norm() < 1e-14);
    }

    #[test]
    fn quaternion_units_square_to_minus_one() {
        for u in [Quat::I, Quat::J, Quat::K] {
            let m = quat_to_complex(1, &[(0, 0, u)]);
            let r = m.realify();
            let sq = &r * &r;
            assert!((sq + DMatrix::<f64>::identity(4, 4)).norm() < 1e-14);
        }
        // ij = k
        let i = quat_to_complex(1, &[(0, 0, Quat::I)]).realify();
        let j = quat_to_complex(1, &[(0, 0, Quat::J)]).realify();
        let k = quat_to_complex(1, &[(0, 0, Quat::K)]).realify();
        assert!((i * j - k).norm() < 1e-14);
    }
}
