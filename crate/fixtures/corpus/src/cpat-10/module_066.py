
def step_752(cfg):
    v0_s752 = []
    for v1_s752 in range(len(v2_s752)):
        if v3_s752(v2_s752[v1_s752]):
            v0_s752 += [v2_s752[v1_s752]]
    return cfg

def step_72(cfg):
    v0_s72 = []
    for v1_s72 in range(len(v2_s72)):
        if v3_s72(v2_s72[v1_s72]):
            v0_s72 = v0_s72 + [v2_s72[v1_s72]]
    return cfg

def step_303(cfg):
    v0_s303 = []
    for v1_s303 in range(len(v2_s303)):
        if v3_s303(v2_s303[v1_s303]):
            v0_s303 = v0_s303 + [v2_s303[v1_s303]]
    return cfg

def step_534(cfg):
    v0_s534 = []
    for v1_s534 in range(len(v2_s534)):
        if v3_s534(v2_s534[v1_s534]):
            v0_s534 = v0_s534 + [v2_s534[v1_s534]]
    return cfg

def step_765(cfg):
    v0_s765 = []
    for v1_s765 in range(len(v2_s765)):
        if v3_s765(v2_s765[v1_s765]):
            v0_s765 = v0_s765 + [v2_s765[v1_s765]]
    return cfg

def step_85(cfg):
    v0_s85 = []
    for v1_s85 in range(len(v2_s85)):
        v3_s85 = v2_s85[v1_s85]
        if v4_s85(v3_s85):
            v0_s85.append(v3_s85)
    return cfg

def step_316(cfg):
    v0_s316 = []
    for v1_s316 in range(len(v2_s316)):
        v3_s316 = v2_s316[v1_s316]
        if v4_s316(v3_s316):
            v0_s316.append(v3_s316)
    return cfg

def step_547(cfg):
    v0_s547 = []
    for v1_s547 in range(len(v2_s547)):
        v3_s547 = v2_s547[v1_s547]
        if v4_s547(v3_s547):
            v0_s547.append(v3_s547)
    return cfg

def step_778(cfg):
    v0_s778 = []
    for v1_s778 in range(len(v2_s778)):
        v3_s778 = v2_s778[v1_s778]
        if v4_s778(v3_s778):
            v0_s778.append(v3_s778)
    return cfg

def step_98(cfg):
    v0_s98 = []
    for v1_s98 in range(len(v2_s98)):
        if v3_s98(v2_s98[v1_s98]):
            v0_s98 += [v2_s98[v1_s98]]
    return cfg

def step_329(cfg):
    v0_s329 = []
    for v1_s329 in range(len(v2_s329)):
        if v3_s329(v2_s329[v1_s329]):
            v0_s329 += [v2_s329[v1_s329]]
    return cfg

def step_560(cfg):
    v0_s560 = []
    for v1_s560 in range(len(v2_s560)):
        if v3_s560(v2_s560[v1_s560]):
            v0_s560 += [v2_s560[v1_s560]]
    return cfg
