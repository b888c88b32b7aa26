use std::path::PathBuf;

use symtour::tsplib::{read_instance, read_opt_tour, EdgeWeightType};
use symtour::{Instance, Metric, Tour};

fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/tsplib")
        .join(file)
}

fn load(name: &str) -> (Instance, Tour) {
    let raw = read_instance(data(&format!("{name}.tsp"))).unwrap();
    let opt = read_opt_tour(data(&format!("{name}.opt.tour"))).unwrap();
    assert_eq!(opt.order.len(), raw.dimension);
    (
        Instance::from_raw(&raw).unwrap(),
        Tour::new(opt.order).unwrap(),
    )
}

#[test]
fn headers_parse() {
    let eil = read_instance(data("eil51.tsp")).unwrap();
    assert_eq!((eil.name.as_str(), eil.dimension), ("eil51", 51));
    assert_eq!(eil.edge_weight_type, EdgeWeightType::Euc2d);
    let att = read_instance(data("att48.tsp")).unwrap();
    assert_eq!(
        (att.dimension, att.edge_weight_type),
        (48, EdgeWeightType::Att)
    );
    let st = read_opt_tour(data("st70.opt.tour")).unwrap();
    assert_eq!(st.order.iter().max(), Some(&69));
}

#[test]
fn eil51_and_st70_optimal_tours() {
    for (name, want) in [("eil51", 426.0), ("st70", 675.0)] {
        let (inst, tour) = load(name);
        assert_eq!(inst.metric(), Metric::TsplibEuc2d);
        assert_eq!(inst.tour_length(&tour), want, "{name}");
        assert_eq!(inst.known_opt(), Some(want));
    }
}

#[test]
fn att48_optimal_tour_under_att() {
    let (inst, tour) = load("att48");
    assert_eq!(inst.metric(), Metric::TsplibAtt);
    assert_eq!(inst.tour_length(&tour), 10628.0);
    assert_eq!(inst.known_opt(), Some(inst.tour_length(&tour)));
}

#[test]
fn optimal_tours_have_zero_relative_error() {
    for name in ["att48", "eil51", "st70"] {
        let (inst, tour) = load(name);
        let opt = inst.known_opt().unwrap();
        assert_eq!((inst.tour_length(&tour) - opt) / opt, 0.0, "{name}");
    }
}
