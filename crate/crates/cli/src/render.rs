use freediv::divisor::DivisorReport;

pub fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Column-aligned rows.
pub fn matrix(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0)).collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().enumerate().map(|(j, c)| format!("{c:>w$}", w = widths[j])).collect();
            format!("  [ {} ]", cells.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn report(r: &DivisorReport) -> String {
    let mut out = vec![
        format!("input: {}", r.input),
        format!("ring: Q[{}]", r.ring.join(", ")),
        format!("reduced: {}", r.reduced),
        format!("homogeneous: {}", r.homogeneous),
    ];
    let weights = match &r.weights.weights {
        Some(w) => format!(
            "{} ({})",
            r.weights.class,
            w.rational.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")
        ),
        None => r.weights.class.to_string(),
    };
    out.push(format!("weights: {weights}"));
    let g = &r.gradient;
    out.push(format!("codim J_f: {}", g.codim));
    if let Some(b) = &g.betti {
        out.push(format!("resolution: {}", b.display()));
    }
    out.push(format!("reg(R/J_f): {}", opt(g.regularity)));
    out.push(format!("st(J_f): {}", opt(g.st)));
    out.push(format!("indeg(J^sat/J): {}", opt(g.indeg)));
    out.push(format!("free: {}", r.free));
    let route = r.linear_type.route.map(|x| serde_json::to_value(x).expect("route").as_str().unwrap_or("").to_string());
    out.push(format!("linear type: {} (route: {})", r.linear_type.verdict, opt(route)));
    out.push(format!("syzygetic: {}", r.syzygetic));
    out.push(format!("Z cap I^sat R^m = K: {}", r.koszul_saturation));
    out.push(format!("koszul free: {}", r.koszul_free));
    let c = &r.cramer;
    out.push(format!(
        "generic saturation condition: {} (pivot degree {}, d {}, cramer structure {})",
        c.gsc,
        opt(c.pivot_degree),
        opt(c.d_parity),
        opt(c.companion_check)
    ));
    if let Some(t) = &r.timings {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v:.1}ms")).collect();
        out.push(format!("timings: {}", parts.join(", ")));
    }
    for n in &r.notes {
        out.push(format!("note: {n}"));
    }
    out.join("\n")
}
