use super::rational::Rational;

pub fn zeros(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zeros(n);
    v[i] = Rational::one();
    v
}

/// `y += a * x`.
pub fn axpy(y: &mut [Rational], a: &Rational, x: &[Rational]) {
    debug_assert_eq!(y.len(), x.len());
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

pub fn add_into(y: &mut [Rational], x: &[Rational]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += xi;
        }
    }
}

pub fn sub_into(y: &mut [Rational], x: &[Rational]) {
    debug_assert_eq!(y.len(), x.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi -= xi;
        }
    }
}

pub fn scaled(a: &Rational, x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|v| a * v).collect()
}

pub fn is_zero(x: &[Rational]) -> bool {
    x.iter().all(Rational::is_zero)
}

/// Nonzero `(index, value)` pairs.
pub fn support(x: &[Rational]) -> impl Iterator<Item = (usize, &Rational)> {
    x.iter().enumerate().filter(|(_, v)| !v.is_zero())
}
