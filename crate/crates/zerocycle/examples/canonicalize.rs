//! Rewrites configuration files in canonical serializer form.
fn main() {
    for path in std::env::args().skip(1) {
        let text = std::fs::read_to_string(&path).expect("readable file");
        let config = zerocycle::parse_configuration(&text).expect("valid configuration");
        std::fs::write(&path, zerocycle::serialize_configuration(&config)).expect("writable file");
    }
}
