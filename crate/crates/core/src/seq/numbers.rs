//! Fibonacci and Lucas numbers: memoized iteration, signed indices, and the
//! fast-doubling route used as an independent check.

use num_bigint::BigInt;
use once_cell::sync::Lazy;
use std::sync::Mutex;

static FIB: Lazy<Mutex<Vec<BigInt>>> =
    Lazy::new(|| Mutex::new(vec![BigInt::from(0), BigInt::from(1)]));
static LUCAS: Lazy<Mutex<Vec<BigInt>>> =
    Lazy::new(|| Mutex::new(vec![BigInt::from(2), BigInt::from(1)]));

fn extend_and_get(table: &Mutex<Vec<BigInt>>, n: u64) -> BigInt {
    let n = n as usize;
    let mut table = table.lock().unwrap();
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] + &table[k - 2];
        table.push(next);
    }
    table[n].clone()
}

/// The n-th Fibonacci number, F_0 = 0, F_1 = 1.
pub fn fibonacci(n: u64) -> BigInt {
    extend_and_get(&FIB, n)
}

/// The n-th Lucas number, L_0 = 2, L_1 = 1.
pub fn lucas(n: u64) -> BigInt {
    extend_and_get(&LUCAS, n)
}

/// Fibonacci at any integer index: `F_{-n} = (-1)^(n+1) F_n`.
pub fn fibonacci_i(n: i64) -> BigInt {
    let v = fibonacci(n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        -v
    } else {
        v
    }
}

/// Lucas at any integer index: `L_{-n} = (-1)^n L_n`.
pub fn lucas_i(n: i64) -> BigInt {
    let v = lucas(n.unsigned_abs());
    if n < 0 && n % 2 != 0 {
        -v
    } else {
        v
    }
}

/// Fibonacci by fast doubling:
/// `F_{2n} = F_n (2 F_{n+1} - F_n)` and `F_{2n+1} = F_n^2 + F_{n+1}^2`.
pub fn fibonacci_doubling(n: u64) -> BigInt {
    fib_pair(n).0
}

/// Lucas by fast doubling, through `L_n = 2 F_{n+1} - F_n`.
pub fn lucas_doubling(n: u64) -> BigInt {
    let (f_n, f_next) = fib_pair(n);
    BigInt::from(2) * f_next - f_n
}

/// Returns `(F_n, F_{n+1})` without touching the memo tables.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::from(0), BigInt::from(1));
    }
    let (a, b) = fib_pair(n / 2);
    let c = &a * (BigInt::from(2) * &b - &a);
    let d = &a * &a + &b * &b;
    if n % 2 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}
