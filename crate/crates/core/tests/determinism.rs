mod common;

use common::small;
use ntnsim::cli_io::ResultFile;
use ntnsim::engine::{run_campaign_with_workers, run_drop};

#[test]
fn result_file_is_identical_for_any_worker_count() {
    let cfg = small("case3.offload_87_frf3", 8.0, 2);
    let json = |w| {
        let summary = run_campaign_with_workers(&cfg, Some(w)).unwrap();
        ResultFile::new(&cfg, summary, 0).to_json().unwrap()
    };
    let one = json(1);
    for w in [2, 3, 8] {
        assert!(one == json(w), "{w} workers");
    }
}

#[test]
fn drops_depend_on_seed_and_index_only() {
    let cfg = small("case3.standalone", 6.0, 3);
    let a = run_drop(&cfg, 2).unwrap();
    assert_eq!(a, run_drop(&cfg, 2).unwrap());
    assert_ne!(a, run_drop(&cfg, 1).unwrap());
    let mut other = cfg.clone();
    other.run.master_seed += 1;
    assert_ne!(a, run_drop(&other, 2).unwrap());
    // A campaign's drop does not depend on how many drops it has.
    let mut longer = cfg.clone();
    longer.run.n_drops = 10;
    assert_eq!(a, run_drop(&longer, 2).unwrap());
}

#[test]
fn summary_reproduces_from_its_echoed_config() {
    let cfg = small("case2.offload_90_frf3", 6.0, 2);
    let summary = run_campaign_with_workers(&cfg, None).unwrap();
    let file = ResultFile::new(&cfg, summary, 0);
    let back = ResultFile::from_json(&file.to_json().unwrap()).unwrap();
    let again = run_campaign_with_workers(&back.metadata.config, None).unwrap();
    assert_eq!(again, file.summary);
}
