use sortsubst::EnumConfig;
use sortsubst_cli::check_round_trip;

#[test]
fn every_enumerated_value_round_trips_at_default_bounds() {
    let n = check_round_trip(&EnumConfig::default()).unwrap_or_else(|e| panic!("{e}"));
    assert_eq!(n.types, 5);
    assert_eq!(n.contexts, 156);
    assert!(n.exprs > 0 && n.itms > 0 && n.isubs > 0, "{n:?}");
}
