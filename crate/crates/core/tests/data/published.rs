//! Published coefficient and cycle listings, transcribed as exponents of
//! `alpha = z^5 + 1`. `-1` stands for the zero element.

/// Exponent of the coefficient of `u^d` in the inverse S-box polynomial,
/// indexed by `d` in `0..255`.
pub const PSI_LOGS: [i16; 255] = [
    92, 243, 223, 242, 16, 132, 56, 247, 67, 201, 2, 194, 208, 235, 240, 89,
    46, 54, 222, 108, 180, 1, 76, 123, 220, 247, 90, 76, 176, 250, 135, 22,
    201, 176, 42, 252, 101, 90, 121, 43, 81, 45, 2, 70, 156, 202, 43, 163,
    206, 143, 153, 249, 185, 0, 61, 214, 173, 109, 204, 138, 202, 63, 68, 5,
    58, 169, 245, 183, 163, 51, 41, 101, 175, 209, 44, 212, 236, 209, 99, 172,
    157, 74, 92, 186, 53, 45, 192, 108, 250, 218, 50, 216, 244, 135, 173, 131,
    15, 59, 234, 188, 44, 238, 9, 202, 203, 159, 109, 47, 39, 51, 209, 5,
    120, 87, 114, 51, 78, 19, 147, 125, 68, 228, 32, 224, 240, 96, 142, 13,
    245, 168, 177, 229, 26, 104, 138, 234, 21, 230, 169, 181, 85, 187, 246, 129,
    102, 130, 14, 198, 102, 122, 6, 136, 67, 172, 14, 195, 99, 211, 192, 177,
    89, 189, 19, 206, 127, 122, 21, 209, 73, 157, 218, 45, 94, 88, 71, 94,
    32, 55, 55, 83, 249, 110, 228, 223, 57, 128, 115, 136, 57, 234, 78, 9,
    227, 152, 225, 235, 113, 69, 163, 121, 56, 233, 11, 164, 15, 27, 202, 242,
    194, 43, 5, 147, 253, 175, 207, 154, 29, 56, 141, 48, 117, 35, 126, 20,
    230, 110, 137, 231, 26, 89, 185, 2, 15, 74, 170, 215, 235, 184, 201, 103,
    85, 17, 47, 212, 216, 100, 196, 0, 248, 194, 234, 186, 195, 76, 163,
];

/// The S-box cycles, each starting at its listed first element.
pub const SBOX_CYCLES: [&[i16]; 5] = [
    &[
        1, 113, 139, 115, 211, 233, 45, 150, 25, 6, 96, 133, 138, 80,
        184, 130, 119, 116, 222, 164, 79, 114, 9, 165, 160, 98, 81, 131,
        215, 181, 200, 125, 143, 41, 179, 202, 157, 70, 146, 92, -1, 210,
        232, 117, 11, 192, 72, 185, 212, 21, 105, 163, 216, 78, 48, 174,
        198, 209, 176,
    ],
    &[
        2, 112, 37, 161, 242, 50, 240, 26, 0, 42, 245, 168, 10, 228,
        229, 251, 29, 76, 247, 223, 243, 17, 49, 197, 225, 3, 104, 106,
        55, 32, 204, 203, 132, 206, 19, 226, 107, 84, 152, 231, 142, 159,
        140, 110, 162, 170, 248, 127, 82, 148, 180, 151, 31, 88, 227, 237,
        85, 43, 95, 218, 71, 177, 121, 65, 188, 186, 77, 23, 187, 238,
        167, 52, 145, 136, 149, 147, 123, 224, 20, 134, 195,
    ],
    &[
        4, 16, 69, 7, 62, 34, 183, 172, 208, 129, 220, 91, 230, 153,
        87, 102, 234, 93, 51, 73, 155, 196, 253, 124, 101, 66, 235, 252,
        193, 18, 94, 90, 144, 83, 5, 47, 194, 244, 118, 173, 120, 199,
        250, 63, 156, 109, 221, 30, 86, 46, 126, 56, 44, 249, 33, 24,
        201, 205, 191, 128, 67, 219, 239, 15, 217, 103, 141, 169, 241, 214,
        59, 154, 207, 175, 178, 36, 97, 13, 28, 12, 74, 182, 8, 14,
        58, 108, 75,
    ],
    &[
        22, 135, 64, 158, 190, 189, 100, 40, 60, 39, 99, 61, 111, 166,
        213, 27, 89, 246, 171, 137, 122, 254, 35, 57, 53, 236, 68,
    ],
    &[
        38, 54,
    ],
];
