use multicurve::complex::nicify;
use multicurve::fixtures::witness_cycle;
use multicurve::nmch::multilink_chain;
use multicurve::rational::qf;

#[test]
fn nicify_preserves_multilink() {
    for (seed, k) in [(0, 1), (1, 2), (2, 2)] {
        let (nice, z) = witness_cycle(seed, k).unwrap();
        assert!(!z.is_nice());
        assert!(z.entries.keys().any(|i| i.k < k), "witness should cross at least once");
        let out = nicify(&z, &qf(1, 100)).unwrap();
        assert!(out.z_nice.is_nice());
        assert!(out.z_nice.hat().unwrap().is_zero());
        assert_eq!(multilink_chain(&out.z_nice).unwrap(), multilink_chain(&nice).unwrap());
    }
}
