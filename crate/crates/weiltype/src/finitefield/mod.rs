//! Exact arithmetic in F_{p^r} for small p and r.
//!
//! Elements travel as u64 encodings: the base-p digits of the encoding,
//! little-endian, are the coordinates in the polynomial basis 1, x, ...,
//! x^{r-1} of F_p[x]/(modulus). Example: in F_9 = F_3[x]/(x^2+1) the
//! encoding 5 = 2 + 1*3 is the element 2 + x. The modulus for each (p, r)
//! is pinned by an embedded table, so encodings mean the same thing in
//! every run.

mod moduli;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("no embedded modulus for F_{p}^{r}")]
    UnsupportedField { p: u64, r: u32 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation requires characteristic 2, field has characteristic {0}")]
    WrongCharacteristic(u64),
    #[error("zero input where a unit is required")]
    ZeroInput,
    #[error("encoding {enc} is out of range for F_{p}^{r}")]
    BadEncoding { enc: u64, p: u64, r: u32 },
    #[error("no embedding of F_{p}^{small} into F_{p}^{big}")]
    NoEmbedding { p: u64, small: u32, big: u32 },
}

/// A fixed model of F_{p^r}. Immutable once built; shared via Arc.
pub struct FieldDesc {
    pub p: u64,
    pub r: u32,
    pub q: u64,
    /// Monic, irreducible, ascending, length r+1.
    modulus: Vec<u64>,
    /// Bit i set iff coefficient of x^i is 1; only for p = 2.
    mod_mask: u64,
    /// trace(x^i) mod p for i < r.
    trace_basis: Vec<u64>,
    /// Bit i set iff trace(x^i) = 1; only for p = 2.
    trace_mask: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---------------------------------------------------------------------------
// Generic polynomial arithmetic with u64 coefficients, parameterized by the
// coefficient field. Used both for the irreducibility check (coefficients
// mod p) and for root finding during subfield embedding (coefficients in the
// big field). Polynomials are ascending coefficient vectors, trimmed.

trait CoeffOps: Copy {
    fn cadd(self, a: u64, b: u64) -> u64;
    fn csub(self, a: u64, b: u64) -> u64;
    fn cmul(self, a: u64, b: u64) -> u64;
    fn cneg(self, a: u64) -> u64;
    fn cinv(self, a: u64) -> u64;
}

#[derive(Copy, Clone)]
struct PrimeOps {
    p: u64,
}

impl CoeffOps for PrimeOps {
    fn cadd(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn csub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn cmul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn cneg(self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn cinv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        // p is tiny; Fermat powering without overflow since p <= 13 in the table
        let mut acc = 1u64;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

impl CoeffOps for &FieldDesc {
    fn cadd(self, a: u64, b: u64) -> u64 {
        self.add(a, b)
    }
    fn csub(self, a: u64, b: u64) -> u64 {
        self.sub(a, b)
    }
    fn cmul(self, a: u64, b: u64) -> u64 {
        self.mul(a, b)
    }
    fn cneg(self, a: u64) -> u64 {
        self.neg(a)
    }
    fn cinv(self, a: u64) -> u64 {
        self.inv(a)
    }
}

fn pv_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pv_add<O: CoeffOps>(o: O, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut v = Vec::with_capacity(n);
    for k in 0..n {
        v.push(o.cadd(
            a.get(k).copied().unwrap_or(0),
            b.get(k).copied().unwrap_or(0),
        ));
    }
    pv_trim(&mut v);
    v
}

fn pv_sub<O: CoeffOps>(o: O, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut v = Vec::with_capacity(n);
    for k in 0..n {
        v.push(o.csub(
            a.get(k).copied().unwrap_or(0),
            b.get(k).copied().unwrap_or(0),
        ));
    }
    pv_trim(&mut v);
    v
}

fn pv_mul<O: CoeffOps>(o: O, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = o.cadd(v[i + j], o.cmul(x, y));
        }
    }
    pv_trim(&mut v);
    v
}

fn pv_rem<O: CoeffOps>(o: O, a: &[u64], f: &[u64]) -> Vec<u64> {
    assert!(!f.is_empty());
    let df = f.len() - 1;
    let linv = o.cinv(f[df]);
    let mut r: Vec<u64> = a.to_vec();
    pv_trim(&mut r);
    while r.len() > df {
        let c = o.cmul(*r.last().unwrap(), linv);
        let k = r.len() - 1 - df;
        for j in 0..=df {
            r[k + j] = o.csub(r[k + j], o.cmul(c, f[j]));
        }
        pv_trim(&mut r);
    }
    r
}

fn pv_gcd<O: CoeffOps>(o: O, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    pv_trim(&mut x);
    pv_trim(&mut y);
    while !y.is_empty() {
        let r = pv_rem(o, &x, &y);
        x = y;
        y = r;
    }
    if let Some(&l) = x.last() {
        let li = o.cinv(l);
        for c in &mut x {
            *c = o.cmul(*c, li);
        }
    }
    x
}

fn pv_mulmod<O: CoeffOps>(o: O, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    pv_rem(o, &pv_mul(o, a, b), f)
}

fn pv_powmod<O: CoeffOps>(o: O, a: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = pv_rem(o, a, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = pv_mulmod(o, &acc, &base, f);
        }
        base = pv_mulmod(o, &base, &base, f);
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------

impl FieldDesc {
    fn construct(p: u64, r: u32, coeffs: &[u64]) -> FieldDesc {
        let q = p.checked_pow(r).expect("q fits in u64");
        assert_eq!(coeffs.len(), r as usize + 1);
        assert_eq!(*coeffs.last().unwrap(), 1, "modulus must be monic");

        // Irreducibility: gcd(x^{p^i} - x, f) = 1 for 0 < i < r and x^{p^r} = x.
        let o = PrimeOps { p };
        let x = vec![0u64, 1];
        let mut cur = x.clone();
        for i in 1..=r {
            cur = pv_powmod(o, &cur, p, coeffs); // now x^{p^i}
            if i < r {
                let diff = pv_sub(o, &cur, &x);
                let g = pv_gcd(o, &diff, coeffs);
                assert_eq!(g, vec![1], "embedded modulus is reducible: p={p} r={r} i={i}");
            }
        }
        assert_eq!(pv_rem(o, &cur, coeffs), pv_rem(o, &x, coeffs), "x^(p^r) != x mod modulus");

        let mut mod_mask = 0u64;
        if p == 2 {
            for (i, &c) in coeffs.iter().enumerate() {
                if c == 1 {
                    mod_mask |= 1 << i;
                }
            }
        }

        let mut desc = FieldDesc {
            p,
            r,
            q,
            modulus: coeffs.to_vec(),
            mod_mask,
            trace_basis: Vec::new(),
            trace_mask: 0,
        };

        // trace(x^i) = sum of the r Frobenius images of x^i; lands in F_p.
        let mut basis = Vec::with_capacity(r as usize);
        let mut mask = 0u64;
        for i in 0..r {
            let xi = p.pow(i); // encoding of x^i
            let mut acc = 0u64;
            let mut cur = xi;
            for _ in 0..r {
                acc = desc.add(acc, cur);
                cur = desc.pow(cur, p);
            }
            let digits = desc.decode(acc);
            assert!(
                digits.iter().skip(1).all(|&d| d == 0),
                "trace of basis element not in the prime field"
            );
            basis.push(digits[0]);
            if digits[0] == 1 {
                mask |= 1 << i;
            }
        }
        desc.trace_basis = basis;
        desc.trace_mask = mask;
        desc
    }

    pub fn decode(&self, enc: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.r as usize);
        let mut e = enc;
        for _ in 0..self.r {
            v.push(e % self.p);
            e /= self.p;
        }
        debug_assert_eq!(e, 0, "encoding out of range");
        v
    }

    pub fn encode(&self, digits: &[u64]) -> u64 {
        let mut e = 0u64;
        for &d in digits.iter().rev() {
            e = e * self.p + d % self.p;
        }
        e
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let da = self.decode(a);
        let db = self.decode(b);
        let v: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&v)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let da = self.decode(a);
        let v: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.encode(&v)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            // carryless multiply, then reduce by the modulus bit mask
            let mut acc = 0u64;
            let mut x = a;
            let mut y = b;
            while y != 0 {
                if y & 1 == 1 {
                    acc ^= x;
                }
                x <<= 1;
                y >>= 1;
            }
            let r = self.r;
            let mut bit = 2 * r.saturating_sub(1);
            while bit >= r {
                if acc >> bit & 1 == 1 {
                    acc ^= self.mod_mask << (bit - r);
                }
                if bit == 0 {
                    break;
                }
                bit -= 1;
            }
            acc
        } else {
            let da = self.decode(a);
            let db = self.decode(b);
            let r = self.r as usize;
            let mut buf = vec![0u64; 2 * r - 1];
            for (i, &x) in da.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in db.iter().enumerate() {
                    buf[i + j] = (buf[i + j] + x * y) % self.p;
                }
            }
            for i in (r..buf.len()).rev() {
                let c = buf[i];
                if c != 0 {
                    for j in 0..r {
                        buf[i - r + j] =
                            (buf[i - r + j] + (self.p - c) * self.modulus[j]) % self.p;
                    }
                    buf[i] = 0;
                }
            }
            self.encode(&buf[..r])
        }
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.q - 2)
    }

    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }

    /// Trace down to F_p, returned as a residue mod p.
    pub fn trace(&self, a: u64) -> u64 {
        if self.p == 2 {
            return ((a & self.trace_mask).count_ones() & 1) as u64;
        }
        let digits = self.decode(a);
        let mut acc = 0u64;
        for (d, t) in digits.iter().zip(&self.trace_basis) {
            acc = (acc + d * t) % self.p;
        }
        acc
    }

    /// True iff a is an n-th power in the multiplicative group.
    pub fn is_power_residue_enc(&self, a: u64, n: u64) -> Result<bool, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInput);
        }
        let g = gcd_u64(n, self.q - 1);
        Ok(self.pow(a, (self.q - 1) / g) == 1)
    }

    /// Solves h^2 + h = c by F_2-linear algebra; canonical answer is the
    /// smaller of the two solutions (they differ by 1).
    pub fn solve_artin_schreier_enc(&self, c: u64) -> Result<Option<u64>, FieldError> {
        if self.p != 2 {
            return Err(FieldError::WrongCharacteristic(self.p));
        }
        let r = self.r as usize;
        // columns of the map h -> h^2 + h in the polynomial basis
        let mut cols = Vec::with_capacity(r);
        for i in 0..r {
            let xi = 1u64 << i;
            cols.push(self.add(self.mul(xi, xi), xi));
        }
        // row reduce over F_2: solve sum_j h_j cols[j] = c, tracking which
        // inputs build each reduced vector in the second component
        let mut basis_vecs: Vec<(u64, u64)> = cols
            .iter()
            .enumerate()
            .map(|(j, &v)| (v, 1u64 << j))
            .collect();
        let mut rhs = (c, 0u64);
        for bit in (0..r).rev() {
            let pos = basis_vecs
                .iter()
                .position(|&(v, _)| v >> bit & 1 == 1);
            let Some(pos) = pos else { continue };
            let piv = basis_vecs.swap_remove(pos);
            for v in &mut basis_vecs {
                if v.0 >> bit & 1 == 1 {
                    v.0 ^= piv.0;
                    v.1 ^= piv.1;
                }
            }
            if rhs.0 >> bit & 1 == 1 {
                rhs.0 ^= piv.0;
                rhs.1 ^= piv.1;
            }
        }
        if rhs.0 != 0 {
            return Ok(None); // c not in the image
        }
        let h = rhs.1;
        debug_assert_eq!(self.add(self.mul(h, h), h), c);
        Ok(Some(h.min(h ^ 1)))
    }

    /// All field elements, in encoding order.
    pub fn elems(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    /// Least-encoded non-square (odd characteristic).
    pub fn least_nonsquare(&self) -> u64 {
        assert!(self.p != 2);
        for a in 1..self.q {
            if !self.is_power_residue_enc(a, 2).unwrap() {
                return a;
            }
        }
        unreachable!("odd field with no non-square")
    }

    /// Least-encoded element of trace 1 (characteristic 2).
    pub fn least_trace_one(&self) -> u64 {
        assert!(self.p == 2);
        for a in 0..self.q {
            if self.trace(a) == 1 {
                return a;
            }
        }
        unreachable!("trace identically zero")
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p, self.r)
    }
}

// ---------------------------------------------------------------------------
// Registry: one shared descriptor per (p, r), one cached embedding per pair.

static REGISTRY: OnceLock<Mutex<HashMap<(u64, u32), Arc<FieldDesc>>>> = OnceLock::new();
static EMBEDDINGS: OnceLock<Mutex<HashMap<(u64, u32, u32), u64>>> = OnceLock::new();

/// Returns the canonical descriptor of F_{p^r}.
pub fn make_field(p: u64, r: u32) -> Result<Arc<FieldDesc>, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    let entry = moduli::MODULUS_TABLE
        .iter()
        .find(|&&(tp, tr, _)| tp == p && tr == r)
        .ok_or(FieldError::UnsupportedField { p, r })?;
    let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = reg.lock().unwrap();
    let desc = map
        .entry((p, r))
        .or_insert_with(|| Arc::new(FieldDesc::construct(p, r, entry.2)))
        .clone();
    Ok(desc)
}

/// A ring embedding F_{p^a} -> F_{p^ab}, determined by where the generator
/// of the small field goes (the least root of the small modulus).
pub struct Embedding {
    pub small: Arc<FieldDesc>,
    pub big: Arc<FieldDesc>,
    gen_image: u64,
}

impl Embedding {
    pub fn map(&self, enc: u64) -> u64 {
        let digits = self.small.decode(enc);
        // Horner at gen_image; digits are prime-field residues, whose
        // encoding in the big field is the residue itself.
        let mut acc = 0u64;
        for &d in digits.iter().rev() {
            acc = self.big.add(self.big.mul(acc, self.gen_image), d);
        }
        acc
    }
}

/// Builds the canonical embedding between two table fields.
pub fn embed_field(
    small: &Arc<FieldDesc>,
    big: &Arc<FieldDesc>,
) -> Result<Embedding, FieldError> {
    if small.p != big.p || big.r % small.r != 0 {
        return Err(FieldError::NoEmbedding {
            p: small.p,
            small: small.r,
            big: big.r,
        });
    }
    let cache = EMBEDDINGS.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (small.p, small.r, big.r);
    {
        let map = cache.lock().unwrap();
        if let Some(&g) = map.get(&key) {
            return Ok(Embedding {
                small: small.clone(),
                big: big.clone(),
                gen_image: g,
            });
        }
    }
    // Lift the small modulus coefficient-wise and find its least root.
    let f: Vec<u64> = small.modulus.clone(); // prime-field coefficients embed as themselves
    let mut roots = roots_in_field(&f, big);
    roots.sort_unstable();
    assert_eq!(
        roots.len(),
        small.r as usize,
        "modulus must split completely in the big field"
    );
    let g = roots[0];
    cache.lock().unwrap().insert(key, g);
    Ok(Embedding {
        small: small.clone(),
        big: big.clone(),
        gen_image: g,
    })
}

/// All roots in `field` of a squarefree polynomial that splits completely
/// there. Deterministic: characteristic 2 splits with trace polynomials over
/// the basis multipliers, odd characteristic with a swept power map.
fn roots_in_field(f: &[u64], field: &FieldDesc) -> Vec<u64> {
    let o: &FieldDesc = field;
    let mut stack = vec![f.to_vec()];
    let mut roots = Vec::new();
    while let Some(mut g) = stack.pop() {
        pv_trim(&mut g);
        if g.len() <= 1 {
            continue;
        }
        if g.len() == 2 {
            // monicize: root = -g0/g1
            let root = o.cneg(o.cmul(g[0], o.cinv(g[1])));
            roots.push(root);
            continue;
        }
        let split = find_split(&g, field);
        let (d1, d2) = split;
        stack.push(d1);
        stack.push(d2);
    }
    roots
}

fn find_split(g: &[u64], field: &FieldDesc) -> (Vec<u64>, Vec<u64>) {
    let o: &FieldDesc = field;
    if field.p == 2 {
        // T_delta(x) = sum_{i < r} (delta x)^{2^i}; distinct roots are told
        // apart by some basis multiplier because the trace form is
        // nondegenerate.
        for i in 0..field.r {
            let delta = 1u64 << i;
            let mut t = pv_rem(o, &[0, delta], g);
            let mut acc = t.clone();
            for _ in 1..field.r {
                t = pv_mulmod(o, &t, &t, g);
                acc = pv_add(o, &acc, &t);
            }
            let d = pv_gcd(o, g, &acc);
            if d.len() > 1 && d.len() < g.len() {
                return split_pair(g, &d, field);
            }
        }
        panic!("trace splitting failed; roots not distinct or not in the field");
    } else {
        // gcd(g, (delta x + c)^((Q-1)/2) - 1) for a deterministic sweep
        let e = (field.q - 1) / 2;
        for delta in 1..field.q.min(1 << 12) {
            for c in 0..field.q.min(1 << 12) {
                let u = vec![c, delta];
                let d0 = pv_gcd(o, g, &u);
                if d0.len() > 1 && d0.len() < g.len() {
                    return split_pair(g, &d0, field);
                }
                let s = pv_powmod(o, &u, e, g);
                let s1 = pv_sub(o, &s, &[1]);
                let d = pv_gcd(o, g, &s1);
                if d.len() > 1 && d.len() < g.len() {
                    return split_pair(g, &d, field);
                }
            }
        }
        panic!("power-map splitting failed; roots not distinct or not in the field");
    }
}

fn split_pair(g: &[u64], d: &[u64], field: &FieldDesc) -> (Vec<u64>, Vec<u64>) {
    let o: &FieldDesc = field;
    // quotient g / d (exact)
    let df = d.len() - 1;
    let linv = o.cinv(*d.last().unwrap());
    let mut r: Vec<u64> = g.to_vec();
    let mut qv = vec![0u64; g.len() - df];
    while r.len() > df {
        let c = o.cmul(*r.last().unwrap(), linv);
        let k = r.len() - 1 - df;
        qv[k] = c;
        for j in 0..=df {
            r[k + j] = o.csub(r[k + j], o.cmul(c, d[j]));
        }
        pv_trim(&mut r);
    }
    assert!(r.is_empty(), "split factor does not divide");
    pv_trim(&mut qv);
    (d.to_vec(), qv)
}

// ---------------------------------------------------------------------------

/// An element of a table field, carrying its field for checked arithmetic.
#[derive(Clone)]
pub struct FieldElem {
    field: Arc<FieldDesc>,
    enc: u64,
}

impl FieldElem {
    pub fn new(field: Arc<FieldDesc>, enc: u64) -> Result<FieldElem, FieldError> {
        if enc >= field.q {
            return Err(FieldError::BadEncoding {
                enc,
                p: field.p,
                r: field.r,
            });
        }
        Ok(FieldElem { field, enc })
    }

    pub fn enc(&self) -> u64 {
        self.enc
    }

    pub fn field(&self) -> &Arc<FieldDesc> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.enc == 0
    }

    pub fn pow(&self, e: u64) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            enc: self.field.pow(self.enc, e),
        }
    }

    pub fn inv(&self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            enc: self.field.inv(self.enc),
        }
    }

    pub fn frobenius(&self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            enc: self.field.frobenius(self.enc),
        }
    }

    fn same_field(&self, other: &FieldElem) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field),
            "arithmetic across distinct fields"
        );
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.p == other.field.p && self.field.r == other.field.r && self.enc == other.enc
    }
}
impl Eq for FieldElem {}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@F_{}^{}", self.enc, self.field.p, self.field.r)
    }
}

impl std::ops::Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        FieldElem {
            enc: self.field.add(self.enc, rhs.enc),
            field: self.field,
        }
    }
}

impl std::ops::Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        FieldElem {
            enc: self.field.sub(self.enc, rhs.enc),
            field: self.field,
        }
    }
}

impl std::ops::Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        FieldElem {
            enc: self.field.mul(self.enc, rhs.enc),
            field: self.field,
        }
    }
}

impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> Self {
        FieldElem {
            enc: self.field.neg(self.enc),
            field: self.field,
        }
    }
}

/// Trace down to the prime field, as a residue mod p.
pub fn trace_to_prime(a: &FieldElem) -> u64 {
    a.field.trace(a.enc)
}

/// True iff a is an n-th power in F_q^*.
pub fn is_power_residue(a: &FieldElem, n: u64) -> Result<bool, FieldError> {
    a.field.is_power_residue_enc(a.enc, n)
}

/// Some h with h^2 + h = c, if one exists (characteristic 2 only).
pub fn solve_artin_schreier(c: &FieldElem) -> Result<Option<FieldElem>, FieldError> {
    let h = c.field.solve_artin_schreier_enc(c.enc)?;
    Ok(h.map(|enc| FieldElem {
        field: c.field.clone(),
        enc,
    }))
}
