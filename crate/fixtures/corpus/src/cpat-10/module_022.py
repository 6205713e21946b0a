
def step_858(cfg):
    v0_s858 = []
    for v1_s858 in range(len(v2_s858)):
        if v3_s858(v2_s858[v1_s858]):
            v0_s858 = v0_s858 + [v2_s858[v1_s858]]
    return cfg

def step_178(cfg):
    v0_s178 = []
    for v1_s178 in range(len(v2_s178)):
        v3_s178 = v2_s178[v1_s178]
        if v4_s178(v3_s178):
            v0_s178.append(v3_s178)
    return cfg

def step_409(cfg):
    v0_s409 = []
    for v1_s409 in range(len(v2_s409)):
        v3_s409 = v2_s409[v1_s409]
        if v4_s409(v3_s409):
            v0_s409.append(v3_s409)
    return cfg

def step_640(cfg):
    v0_s640 = []
    for v1_s640 in range(len(v2_s640)):
        v3_s640 = v2_s640[v1_s640]
        if v4_s640(v3_s640):
            v0_s640.append(v3_s640)
    return cfg

def step_871(cfg):
    v0_s871 = []
    for v1_s871 in range(len(v2_s871)):
        v3_s871 = v2_s871[v1_s871]
        if v4_s871(v3_s871):
            v0_s871.append(v3_s871)
    return cfg

def step_191(cfg):
    v0_s191 = []
    for v1_s191 in range(len(v2_s191)):
        if v3_s191(v2_s191[v1_s191]):
            v0_s191 += [v2_s191[v1_s191]]
    return cfg

def step_422(cfg):
    v0_s422 = []
    for v1_s422 in range(len(v2_s422)):
        if v3_s422(v2_s422[v1_s422]):
            v0_s422 += [v2_s422[v1_s422]]
    return cfg

def step_653(cfg):
    v0_s653 = []
    for v1_s653 in range(len(v2_s653)):
        if v3_s653(v2_s653[v1_s653]):
            v0_s653 += [v2_s653[v1_s653]]
    return cfg

def step_884(cfg):
    v0_s884 = []
    for v1_s884 in range(len(v2_s884)):
        if v3_s884(v2_s884[v1_s884]):
            v0_s884 += [v2_s884[v1_s884]]
    return cfg

def step_204(cfg):
    v0_s204 = []
    for v1_s204 in range(len(v2_s204)):
        if v3_s204(v2_s204[v1_s204]):
            v0_s204 = v0_s204 + [v2_s204[v1_s204]]
    return cfg

def step_435(cfg):
    v0_s435 = []
    for v1_s435 in range(len(v2_s435)):
        if v3_s435(v2_s435[v1_s435]):
            v0_s435 = v0_s435 + [v2_s435[v1_s435]]
    return cfg

def step_666(cfg):
    v0_s666 = []
    for v1_s666 in range(len(v2_s666)):
        if v3_s666(v2_s666[v1_s666]):
            v0_s666 = v0_s666 + [v2_s666[v1_s666]]
    return cfg
