use acmpts_core::hilbert::{delta_table, hilbert_table, hilbert_value};
use acmpts_core::level::{inclusion_property, max_level_size};
use acmpts_core::samples;
use acmpts_core::star::is_acm;
use acmpts_core::{GridPoint, MultiDegree, PointSet};

const SLICE_0: [[i64; 4]; 4] = [[1, 1, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]];
const SLICE_1: [[i64; 4]; 4] = [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];

fn cube3() -> MultiDegree {
    MultiDegree::new(vec![3, 3, 3])
}

fn assert_reference_tables(x: &PointSet) {
    let d = delta_table(x, &cube3()).unwrap();
    for (t, v) in d.iter() {
        let [i, j, k] = [t.entries()[0], t.entries()[1], t.entries()[2]];
        let expected = match i {
            0 => SLICE_0[j as usize][k as usize],
            1 => SLICE_1[j as usize][k as usize],
            2 if j == 0 && k == 0 => 1,
            _ => 0,
        };
        assert_eq!(v, expected, "Delta h at {t}");
    }
}

#[test]
fn eleven_point_delta_tables() {
    assert_reference_tables(&samples::eleven_point_liaison());
}

#[test]
fn reference_tables_telescope_to_eleven() {
    // summing the reference first differences gives h at the box corner
    let total: i64 = SLICE_0.iter().flatten().sum::<i64>() + SLICE_1.iter().flatten().sum::<i64>() + 1;
    assert_eq!(total, 11);
    let h = hilbert_table(&samples::eleven_point_liaison(), &cube3()).unwrap();
    assert_eq!(h.corner(), 11);
    assert_eq!(hilbert_value(&samples::eleven_point_liaison(), &cube3()), Ok(11));
}

#[test]
fn slice_sum_exceeds_every_hyperplane() {
    let x = samples::eleven_point_liaison();
    let d = delta_table(&x, &cube3()).unwrap();
    let slice: i64 = d.iter().filter(|(t, _)| t.entries()[0] == 0).map(|(_, v)| v).sum();
    assert_eq!(slice, 6);
    assert_eq!(max_level_size(&x), 5);
}

#[test]
fn moved_point_keeps_hilbert_function_and_gains_inclusion() {
    let moved = samples::moved_point_variant();
    assert!(moved.contains(&GridPoint::from([3, 2, 2])));
    assert_eq!(
        delta_table(&moved, &cube3()).unwrap(),
        delta_table(&samples::eleven_point_liaison(), &cube3()).unwrap()
    );
    assert_reference_tables(&moved);
    assert!((0..3).any(|i| inclusion_property(&moved, i).unwrap()));
    assert!(is_acm(&moved));
}

#[test]
fn eleven_points_lack_inclusion_but_are_acm() {
    let x = samples::eleven_point_liaison();
    assert!(is_acm(&x));
    assert!((0..3).all(|i| !inclusion_property(&x, i).unwrap()));
}

#[test]
fn twelve_point_chain_is_acm() {
    let x = samples::twelve_point_chain();
    assert_eq!(x.dims(), &[4, 3, 3]);
    assert!(inclusion_property(&x, 0).unwrap());
    assert!(!inclusion_property(&x, 1).unwrap());
    assert!(!inclusion_property(&x, 2).unwrap());
    assert!(is_acm(&x));
}
