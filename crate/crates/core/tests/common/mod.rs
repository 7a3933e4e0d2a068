//! Printed reference tables, indexed `[n][k][j]`.

#![allow(dead_code)]

/// B(n,k,j) for n = 0..=5.
pub const BIG_B: &[&[&[u64]]] = &[
    &[
        &[1],
    ],
    &[
        &[1, 0],
        &[0, 1],
    ],
    &[
        &[1, 0, 0],
        &[1, 4, 1],
        &[0, 0, 1],
    ],
    &[
        &[1, 0, 0, 0],
        &[4, 12, 6, 1],
        &[1, 6, 12, 4],
        &[0, 0, 0, 1],
    ],
    &[
        &[1, 0, 0, 0, 0],
        &[11, 32, 24, 8, 1],
        &[11, 56, 96, 56, 11],
        &[1, 8, 24, 32, 11],
        &[0, 0, 0, 0, 1],
    ],
    &[
        &[1, 0, 0, 0, 0, 0],
        &[26, 80, 80, 40, 10, 1],
        &[66, 330, 600, 480, 180, 26],
        &[26, 180, 480, 600, 330, 66],
        &[1, 10, 40, 80, 80, 26],
        &[0, 0, 0, 0, 0, 1],
    ],
];

/// b(n,k,j) for n = 0..=6.
pub const LITTLE_B: &[&[&[u64]]] = &[
    &[
        &[1],
    ],
    &[
        &[1, 0],
        &[0, 1],
    ],
    &[
        &[1, 0, 0],
        &[1, 2, 1],
        &[0, 0, 1],
    ],
    &[
        &[1, 0, 0, 0],
        &[4, 4, 2, 1],
        &[1, 2, 4, 4],
        &[0, 0, 0, 1],
    ],
    &[
        &[1, 0, 0, 0, 0],
        &[11, 8, 4, 2, 1],
        &[11, 14, 16, 14, 11],
        &[1, 2, 4, 8, 11],
        &[0, 0, 0, 0, 1],
    ],
    &[
        &[1, 0, 0, 0, 0, 0],
        &[26, 16, 8, 4, 2, 1],
        &[66, 66, 60, 48, 36, 26],
        &[26, 36, 48, 60, 66, 66],
        &[1, 2, 4, 8, 16, 26],
        &[0, 0, 0, 0, 0, 1],
    ],
    &[
        &[1, 0, 0, 0, 0, 0, 0],
        &[57, 32, 16, 8, 4, 2, 1],
        &[302, 262, 212, 160, 116, 82, 57],
        &[302, 342, 372, 384, 372, 342, 302],
        &[57, 82, 116, 160, 212, 262, 302],
        &[1, 2, 4, 8, 16, 32, 57],
        &[0, 0, 0, 0, 0, 0, 1],
    ],
];
