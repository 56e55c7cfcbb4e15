import init, { classify_json, verdict_grid_json, linsys_json } from "./pkg/delpezzo_web.js";

const ints = (form, names) => names.map((k) => parseInt(form.elements[k].value, 10));

function show(out, f) {
  out.classList.remove("err");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e);
  }
}

function classify(form) {
  const r = JSON.parse(classify_json(...ints(form, ["d1", "d2", "d3", "n"])));
  const lines = [
    `verdict      ${r.verdict}`,
    `route        ${r.route}`,
    `smooth_pic2  ${r.smooth_pic2}`,
    `K^3          ${r.k3}`,
    `euler        ${r.euler}`,
    `K^2 in cone  ${r.cone}`,
  ];
  if (r.degeneration) {
    const d = r.degeneration;
    lines.push(`conic bundle over F_${d.r}: mu = ${d.mu}, K_S^2 = ${d.ks2}, odp = ${d.odp}, nonruled = ${d.shokurov}`);
  }
  return lines.join("\n");
}

function grid(form, out) {
  const g = JSON.parse(verdict_grid_json(...ints(form, ["max_d1", "d2", "d3", "n_min", "n_max"])));
  const table = document.createElement("table");
  table.className = "grid";
  const head = table.insertRow();
  head.insertCell().textContent = "n\\d1";
  for (const d1 of g.d1) head.appendChild(document.createElement("th")).textContent = d1;
  g.cells.slice().reverse().forEach((row, i) => {
    const n = g.n[g.n.length - 1 - i];
    const tr = table.insertRow();
    tr.appendChild(document.createElement("th")).textContent = n;
    row.forEach((v, d1) => {
      const td = tr.insertCell();
      td.className = v ?? "hole";
      td.title = v ? `(${d1}, ${form.elements.d2.value}, ${form.elements.d3.value}, ${n}): ${v}` : "";
    });
  });
  out.replaceChildren(table);
}

function linsys(form) {
  const degrees = form.elements.degrees.value.trim().split(/[\s,]+/).map((s) => parseInt(s, 10));
  const ls = JSON.parse(linsys_json(Int32Array.from(degrees), ...ints(form, ["a", "b"])));
  const lines = [`|${ls.class}| on P(${ls.scroll.map((d) => `O(${d})`).join(" + ")})`, `h0 = ${ls.h0}`];
  if (ls.mult.length) {
    ls.mult.forEach((m, i) => lines.push(`mult along Y${i + 2} = ${m}`));
    lines.push(`base locus: ${ls.base_locus ?? "none"}`);
  } else {
    lines.push("empty system");
  }
  lines.push("monomials (exponents, coefficient degree):");
  for (const m of ls.monomials) lines.push(`  x^(${m.exponents.join(",")})  ${m.coeff_degree}`);
  return lines.join("\n");
}

await init();

const bind = (id, run) => {
  const form = document.getElementById(id);
  const out = document.getElementById(`${id}-out`);
  const go = () => show(out, () => run(form, out));
  form.addEventListener("submit", (e) => { e.preventDefault(); go(); });
  go();
};

bind("classify", classify);
bind("linsys", linsys);

const gridForm = document.getElementById("grid");
const gridOut = document.getElementById("grid-out");
const drawGrid = () => {
  try {
    grid(gridForm, gridOut);
  } catch (e) {
    gridOut.innerHTML = "";
    gridOut.appendChild(document.createElement("pre")).className = "err";
    gridOut.firstChild.textContent = String(e);
  }
};
gridForm.addEventListener("submit", (e) => { e.preventDefault(); drawGrid(); });
drawGrid();
