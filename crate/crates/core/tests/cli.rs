use fibcube::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};

fn fibcube(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("fibcube").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &str) -> String {
    let (code, out, err) = fibcube(args);
    assert_eq!(code, EXIT_OK, "{args}: {err}");
    out
}

#[test]
fn seq_examples() {
    assert_eq!(ok("seq complement-edges --to 6"), "0 0 2 10 35 104\n");
    assert_eq!(ok("seq a235996 --to 7"), "0 0 0 1 4 13 36\n");
    assert_eq!(ok("seq gamma-edges --to 6"), "1 2 5 10 20 38\n");
    assert_eq!(ok("seq irr-gamma --from 2 --to 5"), "2 4 10 20\n");
    assert_eq!(ok("seq irr-lambda --to 5 --format json"), "[0,2,6,8,20]\n");
    assert_eq!(
        ok("seq complement-edges --from 3 --to 4 --format csv"),
        "n,value\n3,2\n4,10\n"
    );
}

#[test]
fn imb_example() {
    assert_eq!(ok("imb --family gamma --n 5 --upper 00100 --dir 3"), "2\n");
    assert_eq!(ok("imb --family lambda --n 5 --upper 10100 --dir 1"), "1\n");
    let json = ok("imb --family lambda --n 5 --upper 10100 --dir 3 --format json");
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["imbalance"], 1);
    assert_eq!(v["family"], "lambda");
}

#[test]
fn imb_rejects_lower_endpoint() {
    let (code, _, err) = fibcube("imb --family gamma --n 5 --upper 00000 --dir 3");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("upper endpoint"), "{err}");
    let (code, _, _) = fibcube("imb --family gamma --n 5 --upper 0010 --dir 3");
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = fibcube("imb --family q --n 3 --upper 100 --dir 1");
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    assert_eq!(fibcube("").0, EXIT_USAGE);
    assert_eq!(fibcube("frobnicate").0, EXIT_USAGE);
    assert_eq!(fibcube("count --family gamma --n 3 --bogus").0, EXIT_USAGE);
    assert_eq!(fibcube("count --family delta --n 3").0, EXIT_USAGE);
    assert_eq!(fibcube("seq gamma-edges").0, EXIT_USAGE);
    assert_eq!(fibcube("seq gamma-edges --from 5 --to 2").0, EXIT_USAGE);
    assert_eq!(fibcube("gen --family gamma --n 9 --cap 8").0, EXIT_USAGE);
    assert_eq!(fibcube("--help").0, EXIT_OK);
}

#[test]
fn gen_lists_vertices_and_edges() {
    assert_eq!(ok("gen --family gamma --n 3"), "000\n001\n010\n100\n101\n");
    let edges = ok("gen --family gamma --n 2 --edges");
    assert_eq!(edges, "00\t1\t10\n00\t2\t01\n");
    let csv = ok("gen --family lambda --n 3 --edges --format csv");
    assert_eq!(csv.lines().count(), 1 + 3);
    assert_eq!(csv.lines().next(), Some("lower,direction,upper"));
}

#[test]
fn count_with_check() {
    let out = ok("count --family gammabar --from 1 --to 6 --check");
    let edges: Vec<&str> = out.lines().map(|l| l.split('\t').nth(3).unwrap()).collect();
    assert_eq!(edges, ["0", "0", "2", "10", "35", "104"]);
    assert!(out.lines().all(|l| l.ends_with("true")));
    let out = ok("count --family lambda --n 6 --format json");
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["vertices"], 18);
    assert_eq!(v["edges"], 30);
}

#[test]
fn irr_with_check() {
    let out = ok("irr --family gamma --from 2 --to 8 --check --format csv");
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")), "{out}");
    assert_eq!(ok("irr --family q --n 5"), "5\tq\t0\n");
    assert_eq!(ok("irr --family gammabar --n 4"), "4\tgammabar\t10\n");
}

#[test]
fn degseq_complement() {
    assert_eq!(
        ok("degseq --family gammabar --n 5 --check"),
        "5\t3\t10\n5\t4\t5\n5\t5\t4\n"
    );
    assert_eq!(
        ok("degseq --family gamma --n 3"),
        "3\t1\t1\n3\t2\t3\n3\t3\t1\n"
    );
}

#[test]
fn embed_single_and_all() {
    assert_eq!(ok("embed --n 4 --x 0000"), "1111\n");
    assert_eq!(ok("embed --n 5 --x 01010"), "00111\n");
    assert_eq!(fibcube("embed --n 4 --x 0110").0, EXIT_USAGE);
    assert_eq!(fibcube("embed --n 3 --x 010").0, EXIT_USAGE);
    let all = ok("embed --n 4");
    assert_eq!(all.lines().count(), 10);
    for line in all.lines() {
        let parts: Vec<&str> = line.split('\t').collect();
        assert!(parts[0].contains("11") && parts[2].contains("11"), "{line}");
    }
}

#[test]
fn couples_count_equals_irr() {
    let out = ok("couples --family gamma --n 6");
    assert_eq!(out.lines().count(), 2 * 20);
    let out = ok("couples --family lambda --n 5 --format json");
    assert_eq!(out.lines().count(), 20);
    for line in out.lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
    assert_eq!(fibcube("couples --family q --n 3").0, EXIT_USAGE);
}

#[test]
fn verify_json_lines() {
    let out = ok("verify --n 5 --format json");
    let mut last_n = 0;
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true, "{line}");
        let n = v["n"].as_u64().unwrap();
        assert!(n >= last_n);
        last_n = n;
    }
    assert_eq!(last_n, 5);
    let plain = ok("verify --from 9 --to 9");
    assert!(plain.ends_with(", 0 failed\n"), "{plain}");
    assert_eq!(fibcube("verify --n 10 --cap 9").0, EXIT_USAGE);
}

#[test]
fn plain_output_is_deterministic() {
    assert_eq!(ok("verify --n 6"), ok("verify --n 6"));
    assert_eq!(
        ok("couples --family lambda --n 7"),
        ok("couples --family lambda --n 7")
    );
}

#[test]
fn exit_codes_are_distinct() {
    assert_ne!(EXIT_FAILURE, EXIT_OK);
    assert_ne!(EXIT_FAILURE, EXIT_USAGE);
}
