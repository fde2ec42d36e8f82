import init, {
  deflection_grid,
  family_grid,
  torque_family,
  stiffness_curve,
  sweep_energy,
} from "./pkg/vsa_web.js";

const $ = (id) => document.getElementById(id);
const COLORS = ["#1b4f72", "#2471a3", "#2e86c1", "#17a589", "#28b463", "#d4ac0d", "#ca6f1e", "#a93226"];

function plot(canvas, series, { xlabel, ylabel }) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = { l: 64, r: 16, t: 12, b: 36 };
  ctx.clearRect(0, 0, w, h);

  const xs = series.flatMap((s) => s.x);
  const ys = series.flatMap((s) => s.y).filter(Number.isFinite);
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = [Math.min(0, ...ys), Math.max(...ys)];
  if (y1 === y0) y1 = y0 + 1;
  const sx = (v) => pad.l + ((v - x0) / (x1 - x0)) * (w - pad.l - pad.r);
  const sy = (v) => h - pad.b - ((v - y0) / (y1 - y0)) * (h - pad.t - pad.b);

  ctx.strokeStyle = "#999";
  ctx.fillStyle = "#333";
  ctx.font = "12px system-ui";
  ctx.beginPath();
  ctx.moveTo(pad.l, pad.t);
  ctx.lineTo(pad.l, h - pad.b);
  ctx.lineTo(w - pad.r, h - pad.b);
  ctx.stroke();
  for (let i = 0; i <= 4; i++) {
    const yv = y0 + ((y1 - y0) * i) / 4;
    const xv = x0 + ((x1 - x0) * i) / 4;
    ctx.fillText(yv.toPrecision(3), 4, sy(yv) + 4);
    ctx.fillText(xv.toPrecision(3), sx(xv) - 14, h - pad.b + 16);
  }
  ctx.fillText(xlabel, w / 2 - 30, h - 4);
  ctx.save();
  ctx.translate(12, h / 2 + 30);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(ylabel, 0, 0);
  ctx.restore();

  series.forEach((s, i) => {
    ctx.strokeStyle = s.color ?? COLORS[i % COLORS.length];
    ctx.lineWidth = 1.6;
    ctx.beginPath();
    let pen = false;
    s.x.forEach((xv, k) => {
      const yv = s.y[k];
      if (!Number.isFinite(yv)) {
        pen = false;
        return;
      }
      pen ? ctx.lineTo(sx(xv), sy(yv)) : ctx.moveTo(sx(xv), sy(yv));
      pen = true;
    });
    ctx.stroke();
    if (s.label) {
      ctx.fillStyle = ctx.strokeStyle;
      ctx.fillText(s.label, w - pad.r - 90, pad.t + 14 * (i + 1));
    }
  });
}

function springInputs() {
  const leaves = Number($("leaves").value);
  const thickness = Number($("thickness").value);
  $("leaves-out").value = leaves;
  $("thickness-out").value = thickness.toFixed(1);
  return [leaves, thickness];
}

function drawSpring() {
  const [leaves, thickness] = springInputs();
  try {
    const q = Array.from(deflection_grid());
    const xr = Array.from(family_grid());
    const tau = torque_family(leaves, thickness, $("elastica").checked);
    plot(
      $("torque"),
      xr.map((x, i) => ({
        x: q,
        y: Array.from(tau.subarray(i * q.length, (i + 1) * q.length)),
        label: `x_r = ${(x * 1000).toFixed(0)} mm`,
      })),
      { xlabel: "q_d (rad)", ylabel: "tau_s (N·m)" },
    );
    const k = stiffness_curve(leaves, thickness);
    const pts = { x: [], y: [] };
    for (let i = 0; i < k.length; i += 2) {
      pts.x.push(k[i]);
      pts.y.push(k[i + 1]);
    }
    plot($("stiffness"), [pts], { xlabel: "x_r (m)", ylabel: "k (N·m/rad)" });
    $("status").textContent = "";
  } catch (e) {
    $("status").textContent = String(e);
  }
}

function runSweep() {
  try {
    const out = sweep_energy(Number($("qd").value));
    const [wAbs, w, dU, bound, n] = out;
    const t = Array.from(out.subarray(5, 5 + n));
    const work = Array.from(out.subarray(5 + 2 * n, 5 + 3 * n));
    plot($("energy"), [{ x: t, y: work, label: "W_m2_abs" }], { xlabel: "t (s)", ylabel: "motor-2 work (J)" });
    $("sweep-stats").textContent =
      `W_m2_abs = ${wAbs.toFixed(3)} J, W_m2 = ${w.toFixed(3)} J, ΔU = ${dU.toFixed(3)} J, unloaded bound = ${bound.toFixed(3)} J`;
    $("status").textContent = "";
  } catch (e) {
    $("status").textContent = String(e);
  }
}

await init();
for (const id of ["leaves", "thickness", "elastica"]) $(id).addEventListener("input", drawSpring);
$("sweep").addEventListener("click", runSweep);
drawSpring();
runSweep();
