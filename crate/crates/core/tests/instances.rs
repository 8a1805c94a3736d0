use std::path::Path;

use submax::instance::InstanceFile;
use submax::properties::{check_monotone, check_normal, check_submodular, CheckMode};

const INSTANCES: [&str; 6] =
    ["coverage.toml", "harvesting.toml", "non_matroid.toml", "sensors.toml", "supermodular_decoy.toml", "welfare.toml"];

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn read(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)).unwrap()
}

#[test]
fn fixtures_round_trip_up_to_whitespace() {
    for name in INSTANCES {
        let text = read(name);
        let file = InstanceFile::parse(&text).unwrap();
        let back = file.to_toml().unwrap();
        assert_eq!(squash(&back), squash(&text), "{name}:\n{back}");
        assert_eq!(InstanceFile::parse(&back).unwrap(), file);
    }
}

#[test]
fn flagged_fixtures_are_submodular() {
    for name in INSTANCES {
        let inst = InstanceFile::parse(&read(name)).unwrap().build().unwrap();
        let f = &*inst.oracle;
        let all = check_normal(f).holds
            && check_monotone(f, CheckMode::Exhaustive).unwrap().holds
            && check_submodular(f, CheckMode::Exhaustive).unwrap().holds;
        assert_eq!(all, inst.flagged_submodular, "{name}");
    }
}
