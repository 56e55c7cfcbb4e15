use delpezzo::dp3::{necessary_smooth_pic2, ClassificationReport, DP3Family, Route};

fn failed_conditions(f: &DP3Family) -> Vec<&'static str> {
    let m = -f.n;
    let mut out = Vec::new();
    if f.d1 == 0 && f.n <= 0 {
        out.push("d1 = 0 requires n > 0");
    }
    if !((f.d1 == m && 3 * f.d3 >= m) || (f.d1 > m && f.d2 >= m && 3 * f.d3 >= m)) {
        out.push("need d1 = -n and 3d3 >= -n, or d1 > -n, d2 >= -n and 3d3 >= -n");
    }
    if f.d2 == f.d3 && f.n < 0 && 3 * f.d3 <= m {
        out.push("d2 = d3 and n < 0 require 3d3 > -n");
    }
    out
}

pub fn explain(r: &ClassificationReport) -> Vec<String> {
    let f = &r.family;
    let mut lines = vec![format!("family {f}: X in |{}| on {}", f.divisor(), f.scroll())];
    match r.route {
        Route::None => {
            lines.push("not a smooth general member with Picard rank 2:".into());
            lines.extend(failed_conditions(f).into_iter().map(|c| format!("  {c}")));
            let nec = if necessary_smooth_pic2(f) { "hold" } else { "fail" };
            lines.push(format!(
                "  necessary conditions from Reid's multiplicity criterion along Y2, Y3, Y4 {nec}"
            ));
        }
        Route::MainTheoremRational => {
            lines.push("smooth cubic surface bundle over P^1 in P^1 x P^3 of relative degree (3, 1)".into());
            lines.push("the unique rational family among smooth members with Picard rank 2".into());
        }
        Route::CubicThreefold => {
            lines.push("birational to a smooth cubic threefold".into());
            lines.push("nonrational by the intermediate Jacobian criterion (Clemens-Griffiths)".into());
        }
        Route::ShokurovConicBundle => {
            let d = r.degeneration.expect("smooth families carry degeneration data");
            lines.push(format!(
                "degeneration Y = {{x1 F + x2 G = 0}} contains Y3 and has {} ordinary double points",
                d.odp
            ));
            lines.push(format!(
                "blowing up Y3 gives a conic bundle over F_{} with degeneration divisor {}s + {}l",
                d.r, d.delta.a, d.delta.b
            ));
            lines.push(format!(
                "2K + Delta = {}s + {}l is effective: Y is nonruled (Shokurov's conic bundle criterion)",
                d.two_k_plus_delta.a, d.two_k_plus_delta.b
            ));
            lines.push("nonruled special fibre forces X nonrational (Kollar's specialization theorem)".into());
        }
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;
    use delpezzo::classify;

    #[test]
    fn names_failed_condition() {
        let r = classify(&DP3Family::new(0, 0, 0, 0).unwrap());
        let text = explain(&r).join("\n");
        assert!(text.contains("d1 = 0 requires n > 0"));
        assert!(text.contains("hold"));
    }

    #[test]
    fn shokurov_route() {
        let r = classify(&DP3Family::new(2, 1, 1, -2).unwrap());
        let text = explain(&r).join("\n");
        assert!(text.contains("2K + Delta = 1s + 0l is effective"));
    }
}
