use rootgeo::embeddings::{adjoint_dim, EmbeddingKind};
use rootgeo::geometry::Geometry;
use rootgeo::ronan::{build_ronan, expected_counts, ronan_cover};

#[test]
fn plane_over_f2() {
    let r = ronan_cover(2, 2, EmbeddingKind::Natural).unwrap();
    assert_eq!((r.flags, r.lines, r.total_dim), (21, 14, 49));
    assert_eq!((r.relation_rows, r.relation_rank), (42, 41));
    assert_eq!(r.cover_dim, 8);
    assert!(r.lift_ok);
    assert!(r.pass);
}

#[test]
fn plane_over_f3() {
    let r = ronan_cover(2, 3, EmbeddingKind::Natural).unwrap();
    assert_eq!((r.flags, r.lines, r.total_dim), (52, 26, 104));
    assert_eq!(r.relation_rows, 104);
    assert_eq!(r.cover_dim, 8);
    assert_eq!(r.relation_rank, 96);
    assert!(r.projection_ok && r.projection_bijective && r.quotient_lines_ok && r.lift_ok);
    assert!(r.pass);
}

#[test]
fn space_over_f2() {
    let r = ronan_cover(3, 2, EmbeddingKind::Natural).unwrap();
    assert_eq!((r.flags, r.lines, r.total_dim), (105, 210, 525));
    assert_eq!(r.relation_rows, 630);
    assert_eq!(r.relation_rank, 510);
    assert_eq!(r.cover_dim, 15);
    assert!(r.projection_ok && r.projection_bijective && r.quotient_lines_ok && r.lift_ok);
    assert!(r.pass);
}

#[test]
fn universal_and_natural_agree_over_prime_fields() {
    let g = Geometry::enumerate(2, 3).unwrap();
    let (a, _) = build_ronan(&g, |f| EmbeddingKind::Natural.embed(f)).unwrap();
    let (b, _) = build_ronan(&g, |f| EmbeddingKind::Universal.embed(f)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn enumeration_matches_closed_form() {
    for (n, q) in [(2, 2), (2, 3), (3, 2)] {
        let g = Geometry::enumerate(n, q).unwrap();
        let (f, l) = expected_counts(n, q);
        assert_eq!(g.flags.len() as u64, f);
        assert_eq!(g.lines.len() as u64, l);
        // every flag lies on the same number of lines
        let mut per_flag = vec![0usize; g.flags.len()];
        for (p, _) in g.incidences() {
            per_flag[p] += 1;
        }
        let through = 2 * (q.pow(n as u32 - 1) - 1) / (q - 1);
        assert!(per_flag.iter().all(|&c| c as u64 == through));
        assert!(adjoint_dim(n) > 0);
    }
}

