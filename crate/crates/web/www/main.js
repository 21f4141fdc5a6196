import init, {
  permutohedron_points,
  hasse,
  strata_list,
  sample_and_classify,
} from "../pkg/nodal_strata_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";

function el(name, attrs, parent) {
  const e = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  parent.appendChild(e);
  return e;
}

function showError(target, e) {
  let msg = String(e);
  try { msg = JSON.parse(e).message; } catch (_) { /* plain text */ }
  target.textContent = msg;
  target.classList.add("error");
}

function drawPermutohedron() {
  const svg = $("perm-svg");
  svg.replaceChildren();
  const n = Number($("perm-n").value);
  let points;
  try {
    points = JSON.parse(permutohedron_points(n));
  } catch (e) {
    return showError($("perm-summary"), e);
  }
  $("perm-summary").classList.remove("error");
  // project x in R^n onto the plane with one unit direction per coordinate
  const dirs = [...Array(n).keys()].map((i) => [Math.cos(2 * Math.PI * i / n), Math.sin(2 * Math.PI * i / n)]);
  const xy = points.map((p) => {
    const vals = Object.values(p.divisor);
    return vals.reduce(([x, y], v, i) => [x + v * dirs[i][0], y + v * dirs[i][1]], [0, 0]);
  });
  const r = Math.max(1, ...xy.map(([x, y]) => Math.hypot(x, y)));
  const scale = 200 / r;
  points.forEach((p, i) => {
    const [x, y] = xy[i];
    const c = el("circle", {
      cx: 240 + x * scale,
      cy: 240 - y * scale,
      r: 2 + 1.5 * Math.log2(Number(p.multiplicity)),
      fill: p.is_vertex ? "#000" : p.is_interior ? "#2563eb" : "#999",
    }, svg);
    el("title", {}, c).textContent = `${JSON.stringify(p.divisor)}  mult ${p.multiplicity}`;
  });
  const interior = points.filter((p) => p.is_interior).length;
  const vertices = points.filter((p) => p.is_vertex).length;
  $("perm-summary").textContent = `${points.length} lattice points, ${vertices} vertices, ${interior} interior`;
}

function drawHasse() {
  const svg = $("hasse-svg");
  svg.replaceChildren();
  $("hasse-text").hidden = true;
  const n = Number($("hasse-n").value);
  let h;
  try {
    h = JSON.parse(hasse(n, false));
  } catch (e) {
    return showError($("hasse-text"), e), ($("hasse-text").hidden = false);
  }
  const ranks = new Map();
  for (const e of h.elements) {
    if (!ranks.has(e.rank)) ranks.set(e.rank, []);
    ranks.get(e.rank).push(e);
  }
  const top = Math.max(...ranks.keys());
  const width = Number(svg.getAttribute("width"));
  const height = Number(svg.getAttribute("height"));
  const pos = new Map();
  for (const [rank, row] of ranks) {
    row.forEach((e, i) => {
      pos.set(e.id, [(i + 1) * width / (row.length + 1), height - 30 - rank * (height - 60) / Math.max(1, top)]);
    });
  }
  for (const [lo, hi] of h.covers) {
    const [x1, y1] = pos.get(lo);
    const [x2, y2] = pos.get(hi);
    el("line", { x1, y1, x2, y2, stroke: "#bbb" }, svg);
  }
  for (const e of h.elements) {
    const [x, y] = pos.get(e.id);
    const c = el("circle", { cx: x, cy: y, r: 5, fill: "#2563eb" }, svg);
    el("title", {}, c).textContent = e.label;
  }
}

function showDot() {
  const n = Number($("hasse-n").value);
  try {
    $("hasse-text").textContent = hasse(n, true);
    $("hasse-text").classList.remove("error");
  } catch (e) {
    showError($("hasse-text"), e);
  }
  $("hasse-text").hidden = false;
}

function loadStrata() {
  const select = $("sample-stratum");
  select.replaceChildren();
  let n;
  try {
    n = JSON.parse($("sample-lines").value).lines.length;
  } catch (e) {
    return showError($("sample-out"), e);
  }
  let rows;
  try {
    rows = JSON.parse(strata_list(n));
  } catch (e) {
    return showError($("sample-out"), e);
  }
  for (const row of rows) {
    const opt = document.createElement("option");
    opt.value = JSON.stringify(row.stratum);
    opt.textContent = `${row.label}  dim ${row.dimension}  ${row.class}`;
    select.appendChild(opt);
  }
}

function sample() {
  const out = $("sample-out");
  try {
    const r = JSON.parse(sample_and_classify($("sample-lines").value, $("sample-stratum").value));
    out.classList.remove("error");
    out.textContent = [
      `P(l) =\n${r.text}`,
      `det(P(l) - mu) = ${r.charpoly}`,
      `classified as ${JSON.stringify(r.stratum)}`,
      `reducibility: ${r.reducibility}`,
    ].join("\n\n");
  } catch (e) {
    showError(out, e);
  }
}

await init();
$("perm-go").onclick = drawPermutohedron;
$("hasse-go").onclick = drawHasse;
$("hasse-dot").onclick = showDot;
$("sample-load").onclick = loadStrata;
$("sample-go").onclick = sample;
drawPermutohedron();
drawHasse();
loadStrata();
