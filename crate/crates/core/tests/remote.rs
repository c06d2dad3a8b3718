mod common;

use std::io::{BufRead, BufReader, Write};
use std::net::TcpListener;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::thread;

use common::{cli, fixture, fixture_path};
use framerole::lexicon::{cache_key, remote_fetch, FetchError, LexiconQuery};
use framerole::srl::read_assignments;

/// Serves `body` to every request and counts requests.
fn stub(body: String) -> (String, Arc<AtomicUsize>) {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}/sparql", listener.local_addr().unwrap());
    let hits = Arc::new(AtomicUsize::new(0));
    let counter = Arc::clone(&hits);
    thread::spawn(move || {
        for stream in listener.incoming() {
            let Ok(mut stream) = stream else { continue };
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut line = String::new();
            while reader.read_line(&mut line).is_ok_and(|n| n > 0) && line != "\r\n" {
                line.clear();
            }
            counter.fetch_add(1, Ordering::SeqCst);
            let _ = write!(
                stream,
                "HTTP/1.1 200 OK\r\nContent-Type: application/n-triples\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{}",
                body.len(),
                body
            );
        }
    });
    (url, hits)
}

#[test]
fn miss_then_hit() {
    let (url, hits) = stub(fixture("conquer.nt"));
    let cache = tempfile::tempdir().unwrap();
    let q = LexiconQuery::SensesForLemma { lemma: "conquer".into() };
    let first = remote_fetch(&url, &q, cache.path()).unwrap();
    assert_eq!(hits.load(Ordering::SeqCst), 1);
    assert!(cache.path().join(format!("{}.nt", cache_key(&url, &q))).exists());
    let second = remote_fetch(&url, &q, cache.path()).unwrap();
    assert_eq!(first, second);
    assert_eq!(hits.load(Ordering::SeqCst), 1);

    let other = LexiconQuery::MostFrequentSenses { lemma: "conquer".into() };
    remote_fetch(&url, &other, cache.path()).unwrap();
    assert_eq!(hits.load(Ordering::SeqCst), 2);
}

#[test]
fn malformed_body_is_not_cached() {
    let (url, hits) = stub("<http://x/a> <http://x/b> .\n".into());
    let cache = tempfile::tempdir().unwrap();
    let q = LexiconQuery::SensesForLemma { lemma: "conquer".into() };
    assert!(matches!(remote_fetch(&url, &q, cache.path()), Err(FetchError::Parse(_))));
    assert!(matches!(remote_fetch(&url, &q, cache.path()), Err(FetchError::Parse(_))));
    assert_eq!(hits.load(Ordering::SeqCst), 2);
    assert_eq!(std::fs::read_dir(cache.path()).unwrap().count(), 0);
}

#[test]
fn unreachable_endpoint_is_a_network_error() {
    let port = TcpListener::bind("127.0.0.1:0").unwrap().local_addr().unwrap().port();
    let cache = tempfile::tempdir().unwrap();
    let q = LexiconQuery::SensesForLemma { lemma: "x".into() };
    let err = remote_fetch(&format!("http://127.0.0.1:{port}/sparql"), &q, cache.path()).unwrap_err();
    assert!(matches!(err, FetchError::Network(_)), "{err}");
}

#[test]
fn label_augments_empty_lexicon_from_endpoint() {
    let (url, hits) = stub(fixture("conquer.nt"));
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.nt");
    std::fs::write(&empty, "").unwrap();
    let cache = dir.path().join("cache");
    let input = fixture_path("listing2_sidecar.conllu");
    let args = [
        "label",
        "--input",
        input.to_str().unwrap(),
        "--lexicon",
        empty.to_str().unwrap(),
        "--endpoint",
        &url,
        "--cache-dir",
        cache.to_str().unwrap(),
        "--emit",
        "tsv",
    ];
    let (code, out, err) = cli(&args);
    assert_eq!(code, 0, "{err}");
    let names: Vec<String> = read_assignments(&out).unwrap().into_iter().map(|a| a.role_name).collect();
    assert_eq!(names, ["Agent", "Patient"]);
    let fetched = hits.load(Ordering::SeqCst);
    assert!(fetched > 0);
    // a second run is served from the cache
    assert_eq!(cli(&args).1, out);
    assert_eq!(hits.load(Ordering::SeqCst), fetched);
}
