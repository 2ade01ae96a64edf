//! Plain table-driven FIPS-197 AES, used only as a differential oracle.
//!
//! Nothing here touches the field or ring types: the S-boxes are literals,
//! MixColumns uses a local `xtime`, and state is a `[[u8; 4]; 4]` indexed
//! `state[row][col]`.

use crate::error::Error;

#[rustfmt::skip]
pub const SBOX: [u8; 256] = [
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
];

#[rustfmt::skip]
pub const INV_SBOX: [u8; 256] = [
    0x52, 0x09, 0x6a, 0xd5, 0x30, 0x36, 0xa5, 0x38, 0xbf, 0x40, 0xa3, 0x9e, 0x81, 0xf3, 0xd7, 0xfb,
    0x7c, 0xe3, 0x39, 0x82, 0x9b, 0x2f, 0xff, 0x87, 0x34, 0x8e, 0x43, 0x44, 0xc4, 0xde, 0xe9, 0xcb,
    0x54, 0x7b, 0x94, 0x32, 0xa6, 0xc2, 0x23, 0x3d, 0xee, 0x4c, 0x95, 0x0b, 0x42, 0xfa, 0xc3, 0x4e,
    0x08, 0x2e, 0xa1, 0x66, 0x28, 0xd9, 0x24, 0xb2, 0x76, 0x5b, 0xa2, 0x49, 0x6d, 0x8b, 0xd1, 0x25,
    0x72, 0xf8, 0xf6, 0x64, 0x86, 0x68, 0x98, 0x16, 0xd4, 0xa4, 0x5c, 0xcc, 0x5d, 0x65, 0xb6, 0x92,
    0x6c, 0x70, 0x48, 0x50, 0xfd, 0xed, 0xb9, 0xda, 0x5e, 0x15, 0x46, 0x57, 0xa7, 0x8d, 0x9d, 0x84,
    0x90, 0xd8, 0xab, 0x00, 0x8c, 0xbc, 0xd3, 0x0a, 0xf7, 0xe4, 0x58, 0x05, 0xb8, 0xb3, 0x45, 0x06,
    0xd0, 0x2c, 0x1e, 0x8f, 0xca, 0x3f, 0x0f, 0x02, 0xc1, 0xaf, 0xbd, 0x03, 0x01, 0x13, 0x8a, 0x6b,
    0x3a, 0x91, 0x11, 0x41, 0x4f, 0x67, 0xdc, 0xea, 0x97, 0xf2, 0xcf, 0xce, 0xf0, 0xb4, 0xe6, 0x73,
    0x96, 0xac, 0x74, 0x22, 0xe7, 0xad, 0x35, 0x85, 0xe2, 0xf9, 0x37, 0xe8, 0x1c, 0x75, 0xdf, 0x6e,
    0x47, 0xf1, 0x1a, 0x71, 0x1d, 0x29, 0xc5, 0x89, 0x6f, 0xb7, 0x62, 0x0e, 0xaa, 0x18, 0xbe, 0x1b,
    0xfc, 0x56, 0x3e, 0x4b, 0xc6, 0xd2, 0x79, 0x20, 0x9a, 0xdb, 0xc0, 0xfe, 0x78, 0xcd, 0x5a, 0xf4,
    0x1f, 0xdd, 0xa8, 0x33, 0x88, 0x07, 0xc7, 0x31, 0xb1, 0x12, 0x10, 0x59, 0x27, 0x80, 0xec, 0x5f,
    0x60, 0x51, 0x7f, 0xa9, 0x19, 0xb5, 0x4a, 0x0d, 0x2d, 0xe5, 0x7a, 0x9f, 0x93, 0xc9, 0x9c, 0xef,
    0xa0, 0xe0, 0x3b, 0x4d, 0xae, 0x2a, 0xf5, 0xb0, 0xc8, 0xeb, 0xbb, 0x3c, 0x83, 0x53, 0x99, 0x61,
    0x17, 0x2b, 0x04, 0x7e, 0xba, 0x77, 0xd6, 0x26, 0xe1, 0x69, 0x14, 0x63, 0x55, 0x21, 0x0c, 0x7d,
];

const RCON: [u8; 10] = [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1b, 0x36];

type State = [[u8; 4]; 4];

fn xtime(b: u8) -> u8 {
    (b << 1) ^ if b & 0x80 != 0 { 0x1b } else { 0 }
}

fn gmul(mut a: u8, mut b: u8) -> u8 {
    let mut p = 0;
    while b != 0 {
        if b & 1 != 0 {
            p ^= a;
        }
        a = xtime(a);
        b >>= 1;
    }
    p
}

fn load(block: &[u8; 16]) -> State {
    let mut s = [[0u8; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            s[r][c] = block[r + 4 * c];
        }
    }
    s
}

fn store(s: &State) -> [u8; 16] {
    let mut out = [0u8; 16];
    for r in 0..4 {
        for c in 0..4 {
            out[r + 4 * c] = s[r][c];
        }
    }
    out
}

fn rounds_for(key_len: usize) -> Result<usize, Error> {
    match key_len {
        16 => Ok(10),
        24 => Ok(12),
        32 => Ok(14),
        n => Err(Error::Length {
            expected: "16, 24 or 32".to_string(),
            actual: n,
        }),
    }
}

/// Expanded key as `4 * (rounds + 1)` words.
pub fn ref_key_expansion(key: &[u8]) -> Result<Vec<[u8; 4]>, Error> {
    let nr = rounds_for(key.len())?;
    let nk = key.len() / 4;
    let mut w: Vec<[u8; 4]> = Vec::with_capacity(4 * (nr + 1));
    for i in 0..nk {
        w.push([key[4 * i], key[4 * i + 1], key[4 * i + 2], key[4 * i + 3]]);
    }
    for i in nk..4 * (nr + 1) {
        let mut t = w[i - 1];
        if i % nk == 0 {
            t = [t[1], t[2], t[3], t[0]];
            for b in t.iter_mut() {
                *b = SBOX[*b as usize];
            }
            t[0] ^= RCON[i / nk - 1];
        } else if nk > 6 && i % nk == 4 {
            for b in t.iter_mut() {
                *b = SBOX[*b as usize];
            }
        }
        let p = w[i - nk];
        w.push([p[0] ^ t[0], p[1] ^ t[1], p[2] ^ t[2], p[3] ^ t[3]]);
    }
    Ok(w)
}

fn add_round_key(s: &mut State, w: &[[u8; 4]]) {
    for c in 0..4 {
        for r in 0..4 {
            s[r][c] ^= w[c][r];
        }
    }
}

fn sub_bytes(s: &mut State, table: &[u8; 256]) {
    for row in s.iter_mut() {
        for b in row.iter_mut() {
            *b = table[*b as usize];
        }
    }
}

fn shift_rows(s: &mut State) {
    for (r, row) in s.iter_mut().enumerate() {
        row.rotate_left(r);
    }
}

fn inv_shift_rows(s: &mut State) {
    for (r, row) in s.iter_mut().enumerate() {
        row.rotate_right(r);
    }
}

#[allow(clippy::needless_range_loop)]
fn mix_columns(s: &mut State) {
    for c in 0..4 {
        let a = [s[0][c], s[1][c], s[2][c], s[3][c]];
        s[0][c] = xtime(a[0]) ^ (xtime(a[1]) ^ a[1]) ^ a[2] ^ a[3];
        s[1][c] = a[0] ^ xtime(a[1]) ^ (xtime(a[2]) ^ a[2]) ^ a[3];
        s[2][c] = a[0] ^ a[1] ^ xtime(a[2]) ^ (xtime(a[3]) ^ a[3]);
        s[3][c] = (xtime(a[0]) ^ a[0]) ^ a[1] ^ a[2] ^ xtime(a[3]);
    }
}

#[allow(clippy::needless_range_loop)]
fn inv_mix_columns(s: &mut State) {
    for c in 0..4 {
        let a = [s[0][c], s[1][c], s[2][c], s[3][c]];
        for r in 0..4 {
            s[r][c] = gmul(a[r], 0x0e)
                ^ gmul(a[(r + 1) % 4], 0x0b)
                ^ gmul(a[(r + 2) % 4], 0x0d)
                ^ gmul(a[(r + 3) % 4], 0x09);
        }
    }
}

pub fn ref_encrypt(block: &[u8; 16], key: &[u8]) -> Result<[u8; 16], Error> {
    let nr = rounds_for(key.len())?;
    let w = ref_key_expansion(key)?;
    let mut s = load(block);
    add_round_key(&mut s, &w[0..4]);
    for round in 1..nr {
        sub_bytes(&mut s, &SBOX);
        shift_rows(&mut s);
        mix_columns(&mut s);
        add_round_key(&mut s, &w[4 * round..4 * round + 4]);
    }
    sub_bytes(&mut s, &SBOX);
    shift_rows(&mut s);
    add_round_key(&mut s, &w[4 * nr..4 * nr + 4]);
    Ok(store(&s))
}

pub fn ref_decrypt(block: &[u8; 16], key: &[u8]) -> Result<[u8; 16], Error> {
    let nr = rounds_for(key.len())?;
    let w = ref_key_expansion(key)?;
    let mut s = load(block);
    add_round_key(&mut s, &w[4 * nr..4 * nr + 4]);
    for round in (1..nr).rev() {
        inv_shift_rows(&mut s);
        sub_bytes(&mut s, &INV_SBOX);
        add_round_key(&mut s, &w[4 * round..4 * round + 4]);
        inv_mix_columns(&mut s);
    }
    inv_shift_rows(&mut s);
    sub_bytes(&mut s, &INV_SBOX);
    add_round_key(&mut s, &w[0..4]);
    Ok(store(&s))
}
